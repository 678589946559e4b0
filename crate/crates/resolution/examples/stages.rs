//! Builds and checks every stage for the given `n` (default 3) and prints timings.

use std::time::Instant;

use ncrw_resolution::{compose_zero, containment_check, stage_kernel, stage_system, verify_stage};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let limit = 1_000_000;
    for i in 0..=2 {
        let t = Instant::now();
        let r = compose_zero(n, i, limit).expect("compose");
        println!("Φ{}∘Φ{}: ok={} ({:?})", i, i + 1, r.ok(), t.elapsed());
    }
    for s in 1..=3 {
        let t = Instant::now();
        let st = stage_system(n, s).expect("stage");
        let rep = verify_stage(&st, limit);
        println!(
            "stage {s}: rules={} r_a={} r_e={} r_f={} overlaps={} complete={} ({:?})",
            rep.rules, rep.r_a, rep.r_e, rep.r_f, rep.report.overlaps_total, rep.weakly_complete, t.elapsed()
        );
        println!("  families={:?}\n  missing={:?}\n  extra={:?}", rep.families, rep.missing, rep.extra);
        for c in containment_check(&st, limit).expect("containment") {
            println!("  {}: ok={} ({} entries)", c.name, c.ok(), c.entries);
        }
        let ks = stage_kernel(&st, limit).expect("kernel");
        println!("  kernel: {} generators, all matched={}", ks.len(), ks.iter().all(|k| k.ok));
        println!("  predicate violations={:?}", st.split.predicate_violations());
    }
}

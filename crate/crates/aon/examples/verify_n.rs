use std::time::Instant;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let t = Instant::now();
    let r = ncrw_aon::aon_verify(n, ncrw_rewrite::DEFAULT_STEP_LIMIT);
    println!("n={n} rules={} overlaps={} complete={} in {:?}", r.rules, r.verify.overlaps_total, r.complete(), t.elapsed());
}

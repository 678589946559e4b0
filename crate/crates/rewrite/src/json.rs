//! The system file format and JSON forms of reports.

use ncrw_core::json::{alphabet_from_json, alphabet_to_json, poly_from_json, poly_to_json, LetterJson, TermJson};
use ncrw_core::{Alphabet, OrderingSpec};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::{Failure, Overlap, OverlapKind, ReductionTrace, RewriteError, RewriteSystem, Rule, VerifyReport};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RuleJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemJson {
    pub alphabet: Vec<LetterJson>,
    pub ordering: Value,
    pub rules: Vec<RuleJson>,
}

impl SystemJson {
    pub fn to_system(&self) -> Result<RewriteSystem, RewriteError> {
        let alphabet = alphabet_from_json(&self.alphabet)?;
        let ordering = OrderingSpec::from_json(&self.ordering, &alphabet)?;
        let rules = self
            .rules
            .iter()
            .map(|r| {
                Ok(Rule {
                    lhs: alphabet.parse_tokens(&r.lhs)?,
                    rhs: poly_from_json(&r.rhs, &alphabet)?,
                    tag: r.tag.clone(),
                })
            })
            .collect::<Result<Vec<_>, RewriteError>>()?;
        RewriteSystem::new(alphabet, ordering, rules)
    }

    pub fn from_system(sys: &RewriteSystem) -> Self {
        let a = sys.alphabet();
        SystemJson {
            alphabet: alphabet_to_json(a),
            ordering: sys.ordering().to_json(a),
            rules: sys
                .rules()
                .iter()
                .map(|r| RuleJson { tag: r.tag.clone(), lhs: a.word_tokens(&r.lhs), rhs: poly_to_json(&r.rhs, a) })
                .collect(),
        }
    }
}

pub fn system_from_str(text: &str) -> Result<RewriteSystem, RewriteError> {
    serde_json::from_str::<SystemJson>(text)?.to_system()
}

pub fn system_to_string(sys: &RewriteSystem) -> String {
    serde_json::to_string_pretty(&SystemJson::from_system(sys)).expect("system serializes")
}

pub fn overlap_json(o: &Overlap, sys: &RewriteSystem) -> Value {
    json!({
        "word": sys.alphabet().word_tokens(&o.word),
        "rule_a": sys.rule(o.rule_a).label(o.rule_a),
        "rule_b": sys.rule(o.rule_b).label(o.rule_b),
        "kind": match o.kind { OverlapKind::Partial => "partial", OverlapKind::Total => "total" },
        "offsets": [o.pos_a, o.pos_b],
    })
}

pub fn failure_json(f: &Failure, sys: &RewriteSystem) -> Value {
    let a = sys.alphabet();
    json!({
        "overlap": overlap_json(&f.overlap, sys),
        "limit": f.is_limit(),
        "nf_a": f.nf_a.as_ref().map(|p| poly_to_json(p, a)),
        "nf_b": f.nf_b.as_ref().map(|p| poly_to_json(p, a)),
    })
}

pub fn report_json(r: &VerifyReport, sys: &RewriteSystem) -> Value {
    json!({
        "complete": r.complete,
        "overlaps": r.overlaps_total,
        "joinable": r.joinable,
        "failures": r.failures.iter().map(|f| failure_json(f, sys)).collect::<Vec<_>>(),
    })
}

pub fn trace_json(t: &ReductionTrace, alphabet: &Alphabet, sys: &RewriteSystem) -> Value {
    json!({
        "steps": t.steps.iter().map(|s| json!({
            "rule": sys.rule(s.rule).label(s.rule),
            "position": s.position,
            "word": alphabet.word_tokens(&s.word),
        })).collect::<Vec<_>>(),
        "result": poly_to_json(&t.result, alphabet),
    })
}

//! JSON renderings of verdicts and witnesses. Elements are 1-based; exponent
//! coordinates and variable subscripts are positions in the `exps` arrays.

use matmor::convex::{MnatVerdict, ProbeReport, SubmodularVerdict};
use matmor::io::{rational_to_value, subset_json};
use matmor::lorentzian::SampleReport;
use matmor::lorentzian::{LorentzianVerdict, UlcVerdict};
use matmor::morphism::{DeltaVerdict, MorphismFailure, MorphismVerdict, NestedPair};
use matmor::{Error, Polynomial};
use serde_json::{json, Value};

pub fn nested_pair(p: &NestedPair) -> Value {
    json!({ "S1": subset_json(p.smaller), "S2": subset_json(p.larger) })
}

pub fn morphism_failure(f: &MorphismFailure) -> Value {
    match f {
        MorphismFailure::RankInequality(p) => json!({
            "condition": "rank_inequality",
            "S1": subset_json(p.smaller),
            "S2": subset_json(p.larger),
        }),
        MorphismFailure::Cocircuit {
            cocircuit,
            preimage,
        } => json!({
            "condition": "cocircuit",
            "cocircuit": subset_json(*cocircuit),
            "preimage": subset_json(*preimage),
        }),
        MorphismFailure::Flat { flat, preimage } => json!({
            "condition": "flat",
            "flat": subset_json(*flat),
            "preimage": subset_json(*preimage),
        }),
    }
}

pub fn morphism_verdict(v: &MorphismVerdict) -> Value {
    match v {
        Ok(()) => json!({ "holds": true }),
        Err(f) => json!({ "holds": false, "witness": morphism_failure(f) }),
    }
}

pub fn lorentzian(v: &LorentzianVerdict) -> Value {
    let mut out = json!({
        "lorentzian": v.is_lorentzian(),
        "clause": v.clause(),
    });
    let witness = match v {
        LorentzianVerdict::Lorentzian => return out,
        LorentzianVerdict::NegativeCoefficient { exponents } => json!({ "exponents": exponents }),
        LorentzianVerdict::NotMConvex { alpha, beta, i } => {
            json!({ "alpha": alpha, "beta": beta, "i": i })
        }
        LorentzianVerdict::Signature {
            derivatives,
            positive_eigenvalues,
        } => json!({
            "derivatives": derivatives,
            "positive_eigenvalues": positive_eigenvalues,
        }),
    };
    out["witness"] = witness;
    out
}

pub fn ulc(v: &UlcVerdict) -> Value {
    let failure = match v {
        UlcVerdict::UltraLogConcave => Value::Null,
        UlcVerdict::Negative { index } => json!({ "kind": "negative", "index": index }),
        UlcVerdict::InternalZero { index } => json!({ "kind": "internal_zero", "index": index }),
        UlcVerdict::Fails { k } => json!({ "kind": "inequality", "k": k }),
    };
    json!({ "ultra_log_concave": v.is_ulc(), "failure": failure })
}

pub fn mnat(v: &MnatVerdict) -> Value {
    let witness = match v {
        MnatVerdict::MNatConcave => Value::Null,
        MnatVerdict::LocalExchange { set, i, j } => json!({
            "condition": "local_exchange",
            "set": subset_json(*set),
            "i": i + 1,
            "j": j + 1,
        }),
        MnatVerdict::UniqueMaximum { set, i, j, k } => json!({
            "condition": "unique_maximum",
            "set": subset_json(*set),
            "i": i + 1,
            "j": j + 1,
            "k": k + 1,
        }),
    };
    json!({ "mnat_concave": v.is_mnat_concave(), "witness": witness })
}

pub fn submodular(v: &SubmodularVerdict) -> Value {
    let witness = match v {
        SubmodularVerdict::Submodular => Value::Null,
        SubmodularVerdict::Fails { first, second } => json!({
            "first": subset_json(*first),
            "second": subset_json(*second),
        }),
    };
    json!({ "submodular": v.is_submodular(), "witness": witness })
}

pub fn delta(v: &DeltaVerdict) -> Value {
    let witness = match v {
        DeltaVerdict::Valid => Value::Null,
        DeltaVerdict::Interval {
            lower,
            upper,
            middle,
        } => json!({
            "property": "interval",
            "lower": subset_json(*lower),
            "middle": subset_json(*middle),
            "upper": subset_json(*upper),
        }),
        DeltaVerdict::Exchange {
            first,
            second,
            element,
        } => json!({
            "property": "exchange",
            "first": subset_json(*first),
            "second": subset_json(*second),
            "element": element + 1,
        }),
    };
    json!({ "delta_matroid": v.is_valid(), "witness": witness })
}

pub fn probe(report: &ProbeReport) -> Value {
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|(p, v)| json!({ "p": rational_to_value(p), "verdict": lorentzian(v) }))
        .collect();
    json!({
        "points": points,
        "first_failing_p": report.failing().map(|(p, _)| rational_to_value(p)),
        "consistent_with_membership": report.consistent_with_membership(),
    })
}

/// Floats only appear here, in the evidence of the sampled probe.
pub fn sample(report: &SampleReport) -> Value {
    json!({
        "trials": report.trials,
        "passes": report.passes(),
        "worst_ratio": report.worst_ratio,
        "failure": report.failure,
    })
}

/// The polynomial as a document body plus a readable rendering.
pub fn polynomial<F: Fn(usize) -> String>(p: &Polynomial, name: F) -> Value {
    let mut v = matmor::io::polynomial_to_value(p);
    v["text"] = p.display_with(name).into();
    v
}

pub fn error(e: &Error) -> Value {
    let mut body = json!({ "kind": e.kind(), "message": e.to_string() });
    match e {
        Error::NotAMorphism { witness } => body["witness"] = nested_pair(witness),
        Error::NotAFlag { index, witness } => {
            body["witness"] = nested_pair(witness);
            body["constituent"] = (index + 1).into();
        }
        Error::EnumerationBound { n, bound } => {
            body["n"] = (*n).into();
            body["bound"] = (*bound).into();
        }
        _ => {}
    }
    json!({ "error": body })
}

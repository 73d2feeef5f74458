//! JSON documents for the CLI and batch outputs. The component schema for
//! ℓ-weights is stable: every factor is emitted as
//! `{ "eps": int, "qexp": "p/2", "uexp": int, "mult": int }` with the
//! q-exponent always rendered over denominator 2.

use num::BigRational;
use serde_json::{json, Value};

use crate::cartan::CartanData;
use crate::classify::{A22Factorization, Certificate, ClassifyReport};
use crate::lweight::{GenMonomial, LWeight};
use crate::qchar::{Depth, QCharacter, WeightSeries};
use crate::relcheck::{DeltaSupport, RhoReport, StructuralReport, SuiteReport};
use crate::scalar::{Scalar, SpectralParam};

pub fn rational_str(r: &BigRational) -> String {
    r.to_string()
}

fn qexp_str(qh: i64) -> String {
    format!("{qh}/2")
}

pub fn param_json(p: &SpectralParam) -> Value {
    json!({
        "eps": p.eps,
        "qexp": qexp_str(p.qh),
        "uexp": p.ue,
    })
}

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn lweight_json(x: &LWeight) -> Value {
    let comps: Vec<Value> = x
        .comps
        .iter()
        .map(|c| {
            let factors: Vec<Value> = c
                .factors
                .iter()
                .map(|(p, m)| {
                    json!({
                        "eps": p.eps,
                        "qexp": qexp_str(p.qh),
                        "uexp": p.ue,
                        "mult": m,
                    })
                })
                .collect();
            json!({
                "constant": c.constant.to_string(),
                "factors": factors,
            })
        })
        .collect();
    json!({
        "type": x.ty.token(),
        "components": comps,
        "pretty": x.to_string(),
    })
}

pub fn monomial_json(m: &GenMonomial) -> Value {
    let exps: Vec<Value> = m
        .exps
        .iter()
        .map(|(s, e)| {
            json!({
                "gen": s.kind.token(),
                "node": s.node,
                "param": s.param.to_string(),
                "exp": e,
            })
        })
        .collect();
    json!({
        "gamma": m.gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "exponents": exps,
        "pretty": m.to_string(),
    })
}

pub fn cartan_json(cd: &CartanData) -> Value {
    json!({
        "type": cd.ty.token(),
        "M": cd.ty.m,
        "rank": cd.rank,
        "I": (1..=cd.rank).collect::<Vec<_>>(),
        "I0": cd.i0,
        "sigma": (1..=cd.rank).map(|i| cd.sigma(i)).collect::<Vec<_>>(),
        "C": cd.c,
        "Csigma": cd.csigma,
        "d": cd.d.iter().map(rational_str).collect::<Vec<_>>(),
        "N": cd.n_vec,
        "iota": cd.iota,
        "marks": cd.marks,
        "zeta_order": cd.level.order(),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Monomial(m) => json!({ "monomial": monomial_json(m) }),
        Certificate::Exponents(v) => json!({ "exponents": v }),
        Certificate::ViolatingNode(n) => json!({ "violating_node": n }),
    }
}

pub fn report_json(rep: &ClassifyReport) -> Value {
    json!({
        "subject": rep.subject,
        "verdict": rep.verdict,
        "certificate": rep.certificate.as_ref().map(certificate_json),
        "notes": rep.notes,
    })
}

pub fn a22_json(f: &A22Factorization) -> Value {
    let pairs: Vec<Value> = f
        .pairs
        .iter()
        .map(|p| {
            json!({
                "a": p.a.to_string(),
                "b": p.b.to_string(),
                "class": if p.is_finite() { "F" } else { "J" },
                "ladder": p.ladder(),
            })
        })
        .collect();
    json!({
        "pairs": pairs,
        "cs": f.cs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "gamma": f.gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "nodes_visited": f.nodes_visited,
    })
}

pub fn qchar_json(qc: &QCharacter) -> Value {
    let terms: Vec<Value> = qc
        .sorted_terms()
        .into_iter()
        .map(|(lw, t)| {
            let cert: Vec<Value> = t
                .cert
                .iter()
                .map(|s| {
                    json!({
                        "gen": s.kind.token(),
                        "node": s.node,
                        "param": s.param.to_string(),
                    })
                })
                .collect();
            json!({
                "lweight": lweight_json(lw),
                "multiplicity": t.mult,
                "a-certificate": cert,
            })
        })
        .collect();
    json!({
        "type": qc.ty().token(),
        "leading": lweight_json(&qc.leading),
        "depth": match qc.depth {
            Depth::Exact => Value::String("exact".into()),
            Depth::Truncated(d) => json!(d),
        },
        "terms": terms,
    })
}

pub fn weight_series_json(ws: &WeightSeries) -> Value {
    let terms: Vec<Value> = ws
        .terms
        .iter()
        .map(|(w, m)| {
            json!({
                "weight": w.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "multiplicity": m,
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn structural_json(rep: &StructuralReport) -> Value {
    json!({
        "type": rep.ty.token(),
        "pass": rep.pass(),
        "symmetric": rep.symmetric.is_ok(),
        "marks": rep.marks.is_ok(),
        "n_equals_iota": rep.n_equals_iota,
    })
}

pub fn rho_json(rep: &RhoReport) -> Value {
    let cases: Vec<Value> = rep
        .cases
        .iter()
        .map(|c| json!({ "label": c.label, "pass": c.pass, "detail": c.detail }))
        .collect();
    json!({ "type": rep.ty.token(), "pass": rep.pass(), "cases": cases })
}

pub fn delta_json(ds: &DeltaSupport) -> Value {
    let window: Vec<Value> = ds
        .window
        .iter()
        .map(|(m, c)| json!({ "m": m, "coefficient": c.to_string() }))
        .collect();
    let poles: Vec<Value> = ds
        .poles
        .iter()
        .map(|(p, poly)| {
            json!({
                "param": p.to_string(),
                "poly_in_m": poly
                    .iter()
                    .map(|f| format!("({})/({})", f.num, f.den))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "window": window,
        "poles": poles,
        "certified": ds.certified,
        "empty": ds.is_empty(),
    })
}

pub fn suite_json(rep: &SuiteReport) -> Value {
    let outcomes: Vec<Value> = rep
        .outcomes
        .iter()
        .map(|o| {
            json!({
                "check": o.check,
                "type": o.ty,
                "pass": o.pass,
                "detail": o.detail,
            })
        })
        .collect();
    json!({
        "pass": rep.pass(),
        "outcomes": outcomes,
        "warning": rep.warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_data, TwistedType};
    use crate::lweight::gen_y;
    use crate::scalar::Level;

    #[test]
    fn lweight_schema() {
        let cd = cartan_data(TwistedType::from_token("A2-2").unwrap()).unwrap();
        let y = gen_y(&cd, 1, &SpectralParam::q_pow(Level::L2, 1)).unwrap();
        let v = lweight_json(&y);
        let comp = &v["components"][0];
        assert_eq!(comp["constant"], "q^1");
        assert_eq!(comp["factors"][0]["qexp"], "0/2");
        assert_eq!(comp["factors"][0]["mult"], 1);
        assert_eq!(comp["factors"][1]["qexp"], "4/2");
        assert_eq!(comp["factors"][1]["mult"], -1);
    }

    #[test]
    fn cartan_schema() {
        let cd = cartan_data(TwistedType::from_token("D4-3").unwrap()).unwrap();
        let v = cartan_json(&cd);
        assert_eq!(v["M"], 3);
        assert_eq!(v["d"][2], "3");
        assert_eq!(v["zeta_order"], 6);
    }
}

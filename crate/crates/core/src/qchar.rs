//! The q-character ring: formal ℕ-combinations of ℓ-weight classes.
//!
//! Products convolve term maps through exact ℓ-weight multiplication.
//! Series are graded by their A-letter count (equivalently the height of
//! leading/term at the weight level); truncation keeps letters ≤ D and is
//! stable under refinement. The explicit A₂⁽²⁾ expansions build the
//! Kirillov–Reshetikhin-type finite factors and the truncated negative
//! prefundamental factors, every term of which lies in the Nakajima cone
//! below the leading class.

use std::collections::BTreeMap;

use num::BigRational;

use crate::cartan::{CartanData, Coweight};
use crate::classify::{factor_a22, A22Factorization};
use crate::error::Error;
use crate::lweight::{
    gamma_lweight, gen_a, gen_psi, lw_factor, lw_inv, lw_mul, lw_value0, GenKind, GenMonomial,
    GenSym, LWeight,
};
use crate::scalar::{Scalar, SpectralParam};

/// Truncation state of a series: exact (finite) or cut at an A-letter count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Exact,
    Truncated(u32),
}

impl Depth {
    pub fn min(self, other: Depth) -> Depth {
        match (self, other) {
            (Depth::Exact, d) | (d, Depth::Exact) => d,
            (Depth::Truncated(a), Depth::Truncated(b)) => Depth::Truncated(a.min(b)),
        }
    }

    pub fn allows(self, letters: u32) -> bool {
        match self {
            Depth::Exact => true,
            Depth::Truncated(d) => letters <= d,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Term {
    pub mult: u64,
    /// A-letter count of the certificate (the grading used for truncation)
    pub letters: u32,
    /// the A-letters themselves, when the series construction knows them
    pub cert: Vec<GenSym>,
}

#[derive(Debug, Clone)]
pub struct QCharacter {
    pub leading: LWeight,
    pub terms: BTreeMap<LWeight, Term>,
    pub depth: Depth,
}

impl QCharacter {
    pub fn ty(&self) -> crate::cartan::TwistedType {
        self.leading.ty
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms sorted by letter count, then by key.
    pub fn sorted_terms(&self) -> Vec<(&LWeight, &Term)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(la, ta), (lb, tb)| ta.letters.cmp(&tb.letters).then(la.cmp(lb)));
        v
    }

    fn insert(&mut self, lw: LWeight, term: Term) -> Result<(), Error> {
        use std::collections::btree_map::Entry;
        match self.terms.entry(lw) {
            Entry::Vacant(v) => {
                v.insert(term);
            }
            Entry::Occupied(mut o) => {
                let cur = o.get_mut();
                cur.mult = cur
                    .mult
                    .checked_add(term.mult)
                    .ok_or_else(|| Error::Overflow("term multiplicity".into()))?;
            }
        }
        Ok(())
    }
}

/// The singleton class [x].
pub fn qc_class(x: &LWeight) -> QCharacter {
    let mut terms = BTreeMap::new();
    terms.insert(
        x.clone(),
        Term {
            mult: 1,
            letters: 0,
            cert: Vec::new(),
        },
    );
    QCharacter {
        leading: x.clone(),
        terms,
        depth: Depth::Exact,
    }
}

/// Convolution product; ℓ-weights multiply exactly, letter counts add, and
/// terms beyond the common depth are dropped.
pub fn qc_mul(c1: &QCharacter, c2: &QCharacter) -> Result<QCharacter, Error> {
    if c1.ty() != c2.ty() {
        return Err(Error::TypeMismatch);
    }
    let depth = c1.depth.min(c2.depth);
    let mut out = QCharacter {
        leading: lw_mul(&c1.leading, &c2.leading)?,
        terms: BTreeMap::new(),
        depth,
    };
    for (l1, t1) in &c1.terms {
        for (l2, t2) in &c2.terms {
            let letters = t1.letters + t2.letters;
            if !depth.allows(letters) {
                continue;
            }
            let lw = lw_mul(l1, l2)?;
            let mult = t1
                .mult
                .checked_mul(t2.mult)
                .ok_or_else(|| Error::Overflow("term multiplicity".into()))?;
            let mut cert = t1.cert.clone();
            cert.extend(t2.cert.iter().copied());
            out.insert(
                lw,
                Term {
                    mult,
                    letters,
                    cert,
                },
            )?;
        }
    }
    Ok(out)
}

/// Keep only terms with letter count ≤ d.
pub fn qc_truncate(c: &QCharacter, d: u32) -> QCharacter {
    QCharacter {
        leading: c.leading.clone(),
        terms: c
            .terms
            .iter()
            .filter(|(_, t)| t.letters <= d)
            .map(|(l, t)| (l.clone(), t.clone()))
            .collect(),
        depth: c.depth.min(Depth::Truncated(d)),
    }
}

/// Nakajima order: x ⪯ y iff y·x^{-1} is a monomial in the A_{i,a} with
/// nonnegative exponents and trivial constant.
pub fn nakajima_le(cd: &CartanData, x: &LWeight, y: &LWeight) -> Result<bool, Error> {
    Ok(nakajima_certificate(cd, x, y)?.is_some())
}

/// The certifying A-monomial for x ⪯ y, when one exists.
pub fn nakajima_certificate(
    cd: &CartanData,
    x: &LWeight,
    y: &LWeight,
) -> Result<Option<GenMonomial>, Error> {
    let ratio = lw_mul(y, &lw_inv(x)?)?;
    match lw_factor(cd, &ratio, &[GenKind::A]) {
        Ok(m) => {
            if m.gamma_is_trivial() && m.exps.values().all(|e| *e >= 0) {
                Ok(Some(m))
            } else {
                Ok(None)
            }
        }
        Err(Error::NotFactorable { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Every term lies in the cone below the leading class.
pub fn qc_cone_check(cd: &CartanData, c: &QCharacter) -> Result<bool, Error> {
    for lw in c.terms.keys() {
        if !nakajima_le(cd, lw, &c.leading)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_a22_grid(c: &SpectralParam) -> Result<(), Error> {
    if c.ue != 0 || c.qh.rem_euclid(2) != 0 {
        return Err(Error::OffGrid(format!(
            "parameter {c} must lie on the ±q^ℤ grid"
        )));
    }
    Ok(())
}

/// Core generator of the A₂⁽²⁾ expansions: terms
///   leading·(A-string of length m)·(negative string of length k ≤ m)
/// with the strings anchored at b. `mmax` bounds m for the finite
/// (Kirillov–Reshetikhin-type) factor; `budget` cuts the total letter count
/// m + k for truncated factors. At least one bound must be supplied.
fn a22_string_terms(
    cd: &CartanData,
    leading: &LWeight,
    b: &SpectralParam,
    mmax: Option<i64>,
    budget: Option<u32>,
) -> Result<Vec<(LWeight, u32, Vec<GenSym>)>, Error> {
    if mmax.is_none() && budget.is_none() {
        return Err(Error::Input("unbounded series requires a depth".into()));
    }
    let allows = |letters: i64| budget.is_none_or(|d| letters <= i64::from(d));
    let mut out = vec![(leading.clone(), 0u32, Vec::new())];
    let mut lw_m = leading.clone();
    let mut cert_m: Vec<GenSym> = Vec::new();
    let mut m: i64 = 0;
    loop {
        m += 1;
        if let Some(t) = mmax {
            if m > t {
                break;
            }
        }
        if !allows(m) {
            break;
        }
        // extend the principal string: A_{1, b·q^{-2(m-1)}}^{-1}
        let am = GenSym {
            kind: GenKind::A,
            node: 1,
            param: b.q_shift(-4 * (m - 1)),
        };
        lw_m = lw_mul(&lw_m, &lw_inv(&gen_a(cd, am.node, &am.param)?)?)?;
        cert_m.push(am);
        out.push((lw_m.clone(), m as u32, cert_m.clone()));
        // the secondary string at negated parameters: k ≤ m letters
        let mut lw_mk = lw_m.clone();
        let mut cert_mk = cert_m.clone();
        for k in 1..=m {
            if !allows(m + k) {
                break;
            }
            let ak = GenSym {
                kind: GenKind::A,
                node: 1,
                param: b.neg().q_shift(2 - 4 * (k - 1)),
            };
            lw_mk = lw_mul(&lw_mk, &lw_inv(&gen_a(cd, ak.node, &ak.param)?)?)?;
            cert_mk.push(ak);
            out.push((lw_mk.clone(), (m + k) as u32, cert_mk.clone()));
        }
    }
    Ok(out)
}

fn qc_from_terms(
    leading: LWeight,
    terms: Vec<(LWeight, u32, Vec<GenSym>)>,
    depth: Depth,
) -> Result<QCharacter, Error> {
    let mut out = QCharacter {
        leading,
        terms: BTreeMap::new(),
        depth,
    };
    for (lw, letters, cert) in terms {
        out.insert(
            lw,
            Term {
                mult: 1,
                letters,
                cert,
            },
        )?;
    }
    Ok(out)
}

/// q-character of the negative prefundamental class in A₂⁽²⁾, truncated to
/// total A-letter count ≤ depth:
/// [Ψ_c]^{-1}·(1 + Σ_m string(m) + Σ_{k≤m} string(m)·negstring(k)).
pub fn qc_a22_neg_prefundamental(
    cd: &CartanData,
    c: &SpectralParam,
    depth: u32,
) -> Result<QCharacter, Error> {
    if cd.ty.token() != "A2-2" {
        return Err(Error::Input("type must be A2-2".into()));
    }
    require_a22_grid(c)?;
    let leading = lw_inv(&gen_psi(cd, 1, c)?)?;
    let terms = a22_string_terms(cd, &leading, c, None, Some(depth))?;
    qc_from_terms(leading, terms, Depth::Truncated(depth))
}

/// Exact q-character factor of a finite ladder pair (a, b) with
/// a = b·q^{−2T}: the leading class [Ψ_{bq^{−2T}}Ψ_b^{-1}] times the finite
/// string sum; 1 + T + T(T+1)/2 terms.
pub fn qc_a22_kr(cd: &CartanData, b: &SpectralParam, t: i64) -> Result<QCharacter, Error> {
    if cd.ty.token() != "A2-2" {
        return Err(Error::Input("type must be A2-2".into()));
    }
    if t < 0 {
        return Err(Error::Input("ladder length must be nonnegative".into()));
    }
    require_a22_grid(b)?;
    let leading = lw_mul(
        &gen_psi(cd, 1, &b.q_shift(-4 * t))?,
        &lw_inv(&gen_psi(cd, 1, b)?)?,
    )?;
    let terms = a22_string_terms(cd, &leading, b, Some(t), None)?;
    qc_from_terms(leading, terms, Depth::Exact)
}

/// q-character of the simple A₂⁽²⁾ module with highest ℓ-weight x: the
/// product of finite factors over ℱ-pairs, truncated factors over 𝒥-pairs,
/// the one-dimensional positive prefundamental classes, and the constant.
/// Exact when no 𝒥-pair occurs. Every term is re-checked to lie in the
/// cone below the leading class.
pub fn qc_a22_simple(cd: &CartanData, x: &LWeight, depth: u32) -> Result<QCharacter, Error> {
    let fact = factor_a22(cd, x)?;
    let qc = qc_a22_from_factorization(cd, &fact, depth)?;
    if !qc_cone_check(cd, &qc)? {
        return Err(Error::Internal(
            "cone violation in the A2-2 expansion".into(),
        ));
    }
    Ok(qc)
}

pub fn qc_a22_from_factorization(
    cd: &CartanData,
    fact: &A22Factorization,
    depth: u32,
) -> Result<QCharacter, Error> {
    let mut acc = qc_class(&gamma_lweight(cd, &fact.gamma)?);
    for pair in &fact.pairs {
        let factor = match pair.ladder() {
            Some(t) => qc_a22_kr(cd, &pair.b, t)?,
            None => {
                let leading = lw_mul(
                    &gen_psi(cd, 1, &pair.a)?,
                    &lw_inv(&gen_psi(cd, 1, &pair.b)?)?,
                )?;
                let terms = a22_string_terms(cd, &leading, &pair.b, None, Some(depth))?;
                qc_from_terms(leading, terms, Depth::Truncated(depth))?
            }
        };
        acc = qc_mul(&acc, &factor)?;
    }
    for c in &fact.cs {
        acc = qc_mul(&acc, &qc_class(&gen_psi(cd, 1, c)?))?;
    }
    Ok(acc)
}

/// Borel restriction product: simple·∏_i χ_i^{α_i(μ)/ι_i} truncated at
/// depth. The χ_i are opaque weight-series inputs with constant term 1;
/// ground-truth values are external and not asserted here.
pub fn borel_qchar(
    cd: &CartanData,
    simple: &QCharacter,
    mu: &Coweight,
    chis: &[QCharacter],
    depth: u32,
) -> Result<QCharacter, Error> {
    if chis.len() != cd.n_i0() {
        return Err(Error::Input(format!(
            "need one χ series per node ({} expected)",
            cd.n_i0()
        )));
    }
    let mut acc = simple.clone();
    for (idx, &node) in cd.i0.iter().enumerate() {
        let alpha = cd.pairing(mu, idx);
        let iota = cd.iota[idx];
        if alpha.rem_euclid(iota) != 0 {
            return Err(Error::Divisibility {
                node,
                value: alpha,
                divisor: iota,
            });
        }
        let e = alpha / iota;
        if e < 0 {
            return Err(Error::Input(format!(
                "negative χ exponent at node {node}: α = {alpha}"
            )));
        }
        let chi = &chis[idx];
        if !chi.leading.is_one() {
            return Err(Error::Input(format!(
                "χ series at node {node} must have constant term 1"
            )));
        }
        for _ in 0..e {
            acc = qc_mul(&acc, chi)?;
        }
    }
    Ok(qc_truncate(&acc, depth))
}

/// Placeholder χ_i = Σ_{r ≤ D} [ᾱ_i^{−r}], the smoke-test stand-in for the
/// Borel prefundamental character (non-authoritative).
pub fn placeholder_chi(cd: &CartanData, i0_idx: usize, depth: u32) -> Result<QCharacter, Error> {
    let n = cd.n_i0();
    let fin = cd.csigma_finite();
    let mut terms = Vec::new();
    for r in 0..=depth {
        let tuple: Vec<Scalar> = (0..n)
            .map(|j| {
                // ᾱ_i(j)^{-r} = q^{−r·d_i·Cσ_{ij}}
                let exp_q = &cd.d[i0_idx + 1]
                    * BigRational::from_integer(fin[i0_idx][j].into())
                    * BigRational::from_integer((-(r as i64)).into());
                let halves: i64 = (exp_q * BigRational::from_integer(2.into()))
                    .to_integer()
                    .try_into()
                    .expect("weight exponent fits i64");
                Scalar::q_half_pow(cd.level, halves)
            })
            .collect();
        terms.push((gamma_lweight(cd, &tuple)?, r, Vec::new()));
    }
    let leading = terms[0].0.clone();
    qc_from_terms(leading, terms, Depth::Truncated(depth))
}

/// Formal sum over 𝔱*-tuples: the weight-level shadow of a q-character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSeries {
    pub terms: BTreeMap<Vec<Scalar>, u64>,
}

impl WeightSeries {
    pub fn mul(&self, other: &WeightSeries) -> Result<WeightSeries, Error> {
        let mut out = BTreeMap::new();
        for (w1, m1) in &self.terms {
            for (w2, m2) in &other.terms {
                let w: Vec<Scalar> = w1.iter().zip(w2).map(|(a, b)| a.mul(b)).collect();
                let m = m1
                    .checked_mul(*m2)
                    .ok_or_else(|| Error::Overflow("weight multiplicity".into()))?;
                let e = out.entry(w).or_insert(0u64);
                *e = e
                    .checked_add(m)
                    .ok_or_else(|| Error::Overflow("weight multiplicity".into()))?;
            }
        }
        Ok(WeightSeries { terms: out })
    }
}

/// Replace each class [Ψ] by its value at z = 0, merging multiplicities.
pub fn qc_project_weights(c: &QCharacter) -> Result<WeightSeries, Error> {
    let mut out = BTreeMap::new();
    for (lw, t) in &c.terms {
        let w = lw_value0(lw);
        let e = out.entry(w).or_insert(0u64);
        *e = e
            .checked_add(t.mult)
            .ok_or_else(|| Error::Overflow("weight multiplicity".into()))?;
    }
    Ok(WeightSeries { terms: out })
}

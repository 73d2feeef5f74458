//! ℓ-weights: I₀-tuples of factored rational functions in z.
//!
//! The distinguished elements are the generator families
//!   Y_{i,a}, Ỹ_{i,a}  (degree-0),
//!   Ψ_{i,a}           (positive prefundamental, degree ι_i at node i),
//!   A_{i,a}           (affinized simple roots, products of Y's),
//! together with constant tuples γ ∈ 𝔱*. Everything is exact; fixed nodes
//! store 1 − a^M z^M q^{±M} fully factored as ∏_s (1 − ζ^s a q^{±1} z).

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{CartanData, Coweight, TwistedType};
use crate::error::Error;
use crate::ratfun::RationalFactored;
use crate::scalar::{Scalar, SpectralParam};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LWeight {
    pub ty: TwistedType,
    /// one factored rational function per I₀ node, in I₀ order
    pub comps: Vec<RationalFactored>,
}

impl LWeight {
    pub fn one(cd: &CartanData) -> Self {
        LWeight {
            ty: cd.ty,
            comps: vec![RationalFactored::one(cd.level); cd.n_i0()],
        }
    }

    pub fn is_one(&self) -> bool {
        self.comps.iter().all(|c| c.is_one())
    }

    /// True when every component is a constant (an element of 𝔱*).
    pub fn is_constant(&self) -> bool {
        self.comps.iter().all(|c| c.factors.is_empty())
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join("; "))
    }
}

/// Generator symbols of the ℓ-weight monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    Y,
    Ytilde,
    Psi,
    A,
}

impl GenKind {
    pub fn token(self) -> &'static str {
        match self {
            GenKind::Y => "Y",
            GenKind::Ytilde => "Yt",
            GenKind::Psi => "P",
            GenKind::A => "A",
        }
    }
}

/// One generator occurrence G[i, a] with a canonicalized parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSym {
    pub kind: GenKind,
    /// paper node label in I₀
    pub node: usize,
    pub param: SpectralParam,
}

/// At a fixed node the generators depend only on a^{ι_i}, so the stored
/// representative has its root-of-unity exponent reduced mod L/ι_i.
pub fn canonical_param(cd: &CartanData, node: usize, a: &SpectralParam) -> SpectralParam {
    let iota = cd.iota_of(node).unwrap_or(1);
    let modulus = cd.level.order() / iota;
    SpectralParam::new(cd.level, a.eps.rem_euclid(modulus), a.qh, a.ue)
}

/// Monomial γ·∏ G[i,a]^{e} in the generators, the canonical certificate
/// produced by factorization and consumed by evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMonomial {
    pub ty: TwistedType,
    /// constant tuple γ ∈ 𝔱*, one monomial unit per I₀ node
    pub gamma: Vec<Scalar>,
    pub exps: BTreeMap<GenSym, i64>,
}

impl GenMonomial {
    pub fn one(cd: &CartanData) -> Self {
        GenMonomial {
            ty: cd.ty,
            gamma: vec![Scalar::one(cd.level); cd.n_i0()],
            exps: BTreeMap::new(),
        }
    }

    pub fn gamma_is_trivial(&self) -> bool {
        self.gamma.iter().all(|g| g.is_one())
    }

    pub fn mul_gen(&mut self, sym: GenSym, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.exps.entry(sym).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exps.remove(&sym);
        }
    }
}

impl fmt::Display for GenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.gamma_is_trivial() || self.exps.is_empty() {
            let gs: Vec<String> = self.gamma.iter().map(|g| g.to_string()).collect();
            parts.push(format!("c[{}]", gs.join(",")));
        }
        for (sym, e) in &self.exps {
            let body = format!("{}[{},{}]", sym.kind.token(), sym.node, sym.param);
            if *e == 1 {
                parts.push(body);
            } else {
                parts.push(format!("{body}^{e}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Y_{i,a}: the degree-0 generator with normalized constant q^{ι_i}.
pub fn gen_y(cd: &CartanData, node: usize, a: &SpectralParam) -> Result<LWeight, Error> {
    let idx = cd.i0_index(node)?;
    let mut out = LWeight::one(cd);
    let comp = &mut out.comps[idx];
    if cd.is_fixed(node) {
        let ze = cd.zeta_exp();
        comp.constant = Scalar::q_pow(cd.level, cd.ty.m);
        for s in 1..=cd.ty.m {
            comp.mul_factor(&a.root_shift(s * ze).q_shift(-2), 1);
            comp.mul_factor(&a.root_shift(s * ze).q_shift(2), -1);
        }
    } else {
        comp.constant = Scalar::q_pow(cd.level, 1);
        comp.mul_factor(&a.q_shift(-2), 1);
        comp.mul_factor(&a.q_shift(2), -1);
    }
    Ok(out)
}

/// Ỹ_{i,a} = q^{−ι_i}·Y_{i,a}: the same rational function without the
/// constant prefactor.
pub fn gen_ytilde(cd: &CartanData, node: usize, a: &SpectralParam) -> Result<LWeight, Error> {
    let mut out = gen_y(cd, node, a)?;
    let idx = cd.i0_index(node)?;
    out.comps[idx].constant = Scalar::one(cd.level);
    Ok(out)
}

/// Positive prefundamental ℓ-weight Ψ_{i,a}: node component 1 − (az)^{ι_i},
/// stored factored as ∏_{s=1}^{ι_i} (1 − ζ_{ι_i}^s a z).
pub fn gen_psi(cd: &CartanData, node: usize, a: &SpectralParam) -> Result<LWeight, Error> {
    let idx = cd.i0_index(node)?;
    let iota = cd.iota[idx];
    let mut out = LWeight::one(cd);
    let comp = &mut out.comps[idx];
    let step = cd.level.order() / iota;
    for s in 1..=iota {
        comp.mul_factor(&a.root_shift(s * step), 1);
    }
    Ok(out)
}

/// A_{i,a}, assembled from Y's by the case split on C_{i,σ(i)}.
pub fn gen_a(cd: &CartanData, node: usize, a: &SpectralParam) -> Result<LWeight, Error> {
    cd.i0_index(node)?;
    let ze = cd.zeta_exp();
    let mut out = lw_mul(
        &gen_y(cd, node, &a.q_shift(2))?,
        &gen_y(cd, node, &a.q_shift(-2))?,
    )?;
    let cis = cd.c(node, cd.sigma(node));
    if cis == -1 {
        out = lw_mul(&out, &lw_inv(&gen_y(cd, node, &a.neg())?)?)?;
    }
    for &j in &cd.i0 {
        if cd.c(node, j) != -1 {
            continue;
        }
        if cis == 2 && !cd.is_fixed(j) {
            // fixed center, moving neighbour: the whole ζ-orbit of parameters
            for s in 1..=cd.ty.m {
                out = lw_mul(&out, &lw_inv(&gen_y(cd, j, &a.root_shift(s * ze))?)?)?;
            }
        } else {
            out = lw_mul(&out, &lw_inv(&gen_y(cd, j, a)?)?)?;
        }
    }
    Ok(out)
}

/// Constant ℓ-weight from a 𝔱*-tuple.
pub fn gamma_lweight(cd: &CartanData, gamma: &[Scalar]) -> Result<LWeight, Error> {
    if gamma.len() != cd.n_i0() {
        return Err(Error::Input(format!(
            "γ must have {} components for {}",
            cd.n_i0(),
            cd.ty
        )));
    }
    let mut out = LWeight::one(cd);
    for (c, g) in out.comps.iter_mut().zip(gamma) {
        *c = RationalFactored::constant(g.clone())?;
    }
    Ok(out)
}

fn gen_build(cd: &CartanData, sym: &GenSym) -> Result<LWeight, Error> {
    match sym.kind {
        GenKind::Y => gen_y(cd, sym.node, &sym.param),
        GenKind::Ytilde => gen_ytilde(cd, sym.node, &sym.param),
        GenKind::Psi => gen_psi(cd, sym.node, &sym.param),
        GenKind::A => gen_a(cd, sym.node, &sym.param),
    }
}

/// Expand a generator monomial to its reduced ℓ-weight.
pub fn lw_eval(cd: &CartanData, m: &GenMonomial) -> Result<LWeight, Error> {
    if m.ty != cd.ty {
        return Err(Error::TypeMismatch);
    }
    let mut out = gamma_lweight(cd, &m.gamma)?;
    for (sym, e) in &m.exps {
        let g = gen_build(cd, sym)?;
        out = lw_mul(&out, &lw_pow(&g, *e)?)?;
    }
    Ok(out)
}

pub fn lw_mul(x: &LWeight, y: &LWeight) -> Result<LWeight, Error> {
    if x.ty != y.ty {
        return Err(Error::TypeMismatch);
    }
    Ok(LWeight {
        ty: x.ty,
        comps: x
            .comps
            .iter()
            .zip(&y.comps)
            .map(|(a, b)| a.mul(b))
            .collect(),
    })
}

pub fn lw_inv(x: &LWeight) -> Result<LWeight, Error> {
    Ok(LWeight {
        ty: x.ty,
        comps: x
            .comps
            .iter()
            .map(|c| c.inv())
            .collect::<Result<_, _>>()?,
    })
}

pub fn lw_pow(x: &LWeight, k: i64) -> Result<LWeight, Error> {
    Ok(LWeight {
        ty: x.ty,
        comps: x
            .comps
            .iter()
            .map(|c| c.pow(k))
            .collect::<Result<_, _>>()?,
    })
}

/// Componentwise degree vector; deg Ψ_i = α_i(μ) for members of 𝔯_μ.
pub fn lw_degree(x: &LWeight) -> Vec<i64> {
    x.comps.iter().map(|c| c.degree()).collect()
}

pub fn lw_value0(x: &LWeight) -> Vec<Scalar> {
    x.comps.iter().map(|c| c.value0()).collect()
}

pub fn lw_value_inf(x: &LWeight) -> Vec<Scalar> {
    x.comps.iter().map(|c| c.value_inf()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandAt {
    Zero,
    Infinity,
}

/// Exact expansion coefficients of one component, as (z-exponent, value)
/// pairs: at zero the exponents run 0..=order, at infinity deg..=deg−order.
pub fn lw_expand(
    cd: &CartanData,
    x: &LWeight,
    node: usize,
    at: ExpandAt,
    order: usize,
) -> Result<Vec<(i64, Scalar)>, Error> {
    let idx = cd.i0_index(node)?;
    let comp = &x.comps[idx];
    Ok(match at {
        ExpandAt::Zero => comp
            .expand_zero(order)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k as i64, c))
            .collect(),
        ExpandAt::Infinity => {
            let (deg, coeffs) = comp.expand_inf(order);
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (deg - k as i64, c))
                .collect()
        }
    })
}

/// Shift map on highest ℓ-weights: multiply component i by
/// (1 − (az)^{ι_i})^{n_i(μ′)} with n_i(μ′) = −α_i(μ′)/ι_i, for μ′ ∈ −Λ⁺.
pub fn shift_lweight(
    cd: &CartanData,
    x: &LWeight,
    mu_prime: &Coweight,
    a: &SpectralParam,
) -> Result<LWeight, Error> {
    if x.ty != cd.ty {
        return Err(Error::TypeMismatch);
    }
    let mut out = x.clone();
    for (idx, &node) in cd.i0.iter().enumerate() {
        let alpha = cd.pairing(mu_prime, idx);
        if alpha > 0 {
            return Err(Error::Input(format!(
                "shift coweight must lie in −Λ⁺; α_{node}(μ′) = {alpha} > 0"
            )));
        }
        let iota = cd.iota[idx];
        if alpha.rem_euclid(iota) != 0 {
            return Err(Error::Divisibility {
                node,
                value: alpha,
                divisor: iota,
            });
        }
        let n_i = -alpha / iota;
        if n_i > 0 {
            let psi = gen_psi(cd, node, a)?;
            out = lw_mul(&out, &lw_pow(&psi, n_i)?)?;
        }
    }
    Ok(out)
}

/// Highest ℓ-weight of the deformed tensor product: component i is
/// x_i(z)·y_i(zu).
pub fn coproduct_hw(x: &LWeight, y: &LWeight) -> Result<LWeight, Error> {
    if x.ty != y.ty {
        return Err(Error::TypeMismatch);
    }
    Ok(LWeight {
        ty: x.ty,
        comps: x
            .comps
            .iter()
            .zip(&y.comps)
            .map(|(a, b)| a.mul(&b.shift_z_u(1)))
            .collect(),
    })
}

/// Specialize the fusion parameter at u = 1 and re-reduce.
pub fn specialize_u1(x: &LWeight) -> LWeight {
    LWeight {
        ty: x.ty,
        comps: x.comps.iter().map(|c| c.set_u_one()).collect(),
    }
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

const FACTOR_BUDGET: usize = 10_000;

/// Collapse one component's factors to "slots". At a fixed node the factors
/// must form complete ζ_M-orbits with a common multiplicity; a slot then
/// stands for the whole orbit, keyed by the canonical representative.
fn component_slots(
    cd: &CartanData,
    comp_idx: usize,
    rf: &RationalFactored,
) -> Result<BTreeMap<SpectralParam, i64>, Error> {
    let node = cd.i0[comp_idx];
    for a in rf.factors.keys() {
        if a.ue != 0 {
            return Err(Error::OffGrid(format!(
                "parameter {a} of component {node} lies outside μ_L·q^(ℤ/2)"
            )));
        }
    }
    if !cd.is_fixed(node) {
        return Ok(rf.factors.clone());
    }
    let m = cd.ty.m;
    let step = cd.level.order() / m;
    let mut out = BTreeMap::new();
    for (a, &mult) in &rf.factors {
        let canon = SpectralParam::new(cd.level, a.eps.rem_euclid(step), a.qh, a.ue);
        if a.eps == canon.eps {
            for k in 1..m {
                if rf.factors.get(&a.root_shift(k * step)) != Some(&mult) {
                    return Err(Error::NotFactorable {
                        component: node,
                        detail: format!(
                            "factor at {a} does not close into a ζ-orbit at the fixed node"
                        ),
                    });
                }
            }
            out.insert(canon, mult);
        } else if !rf.factors.contains_key(&canon) {
            return Err(Error::NotFactorable {
                component: node,
                detail: format!("factor at {a} has no canonical orbit partner"),
            });
        }
    }
    Ok(out)
}

fn slots_of(cd: &CartanData, x: &LWeight) -> Result<Vec<BTreeMap<SpectralParam, i64>>, Error> {
    x.comps
        .iter()
        .enumerate()
        .map(|(ci, rf)| component_slots(cd, ci, rf))
        .collect()
}

fn top_slot(work: &BTreeMap<SpectralParam, i64>) -> Option<(SpectralParam, i64)> {
    work.iter()
        .filter(|(_, m)| **m != 0)
        .max_by_key(|(p, _)| (p.qh, p.eps, p.ue))
        .map(|(p, m)| (*p, *m))
}

/// Factor an ℓ-weight over a generator dictionary.
///
/// With a Y-like generator in the dictionary the canonical basis is
/// {Y (or Ỹ), Ψ}: A is an exact Y-product and Ỹ differs from Y by a
/// constant, so neither enlarges the image. Without a Y-like generator the
/// dictionary is either pure Ψ or pure A (the Nakajima-order case).
/// The peeling strategy walks each component's slots from the highest
/// q-exponent down; correctness is certified at the end by re-evaluating the
/// monomial and comparing exactly, never by trusting the strategy.
pub fn lw_factor(
    cd: &CartanData,
    x: &LWeight,
    dict: &[GenKind],
) -> Result<GenMonomial, Error> {
    if x.ty != cd.ty {
        return Err(Error::TypeMismatch);
    }
    let ylike = if dict.contains(&GenKind::Y) {
        Some(GenKind::Y)
    } else if dict.contains(&GenKind::Ytilde) {
        Some(GenKind::Ytilde)
    } else {
        None
    };
    let has_psi = dict.contains(&GenKind::Psi);
    let mut mono = GenMonomial::one(cd);

    if ylike.is_some() || has_psi {
        let slots = slots_of(cd, x)?;
        for (ci, slot_map) in slots.into_iter().enumerate() {
            let node = cd.i0[ci];
            let mut work = slot_map;
            let mut budget = FACTOR_BUDGET;
            while let Some((p, m)) = top_slot(&work) {
                if budget == 0 {
                    return Err(Error::NotFactorable {
                        component: node,
                        detail: "factorization budget exhausted".into(),
                    });
                }
                budget -= 1;
                if m > 0 && has_psi {
                    mono.mul_gen(
                        GenSym {
                            kind: GenKind::Psi,
                            node,
                            param: p,
                        },
                        m,
                    );
                    work.insert(p, 0);
                } else if m < 0 && ylike.is_some() {
                    // a top pole is the leading factor of Y_{i,pq^{-1}}, but
                    // only as much of it as the zero slot two q-steps down
                    // can absorb; the remainder must be prefundamental
                    let avail = *work.get(&p.q_shift(-4)).unwrap_or(&0);
                    let e = (-m).min(avail.max(0));
                    if e > 0 {
                        mono.mul_gen(
                            GenSym {
                                kind: ylike.unwrap(),
                                node,
                                param: p.q_shift(-2),
                            },
                            e,
                        );
                        work.insert(p, m + e);
                        *work.entry(p.q_shift(-4)).or_insert(0) -= e;
                    } else if has_psi {
                        mono.mul_gen(
                            GenSym {
                                kind: GenKind::Psi,
                                node,
                                param: p,
                            },
                            m,
                        );
                        work.insert(p, 0);
                    } else {
                        // Y-only dictionary: push the pole downward and let
                        // the budget arbitrate
                        mono.mul_gen(
                            GenSym {
                                kind: ylike.unwrap(),
                                node,
                                param: p.q_shift(-2),
                            },
                            -m,
                        );
                        work.insert(p, 0);
                        *work.entry(p.q_shift(-4)).or_insert(0) += m;
                    }
                } else if has_psi {
                    mono.mul_gen(
                        GenSym {
                            kind: GenKind::Psi,
                            node,
                            param: p,
                        },
                        m,
                    );
                    work.insert(p, 0);
                } else if let Some(ykind) = ylike {
                    // zero at the top with no Ψ available: Y_{i,pq^{-1}}^{-m}
                    mono.mul_gen(
                        GenSym {
                            kind: ykind,
                            node,
                            param: p.q_shift(-2),
                        },
                        -m,
                    );
                    work.insert(p, 0);
                    *work.entry(p.q_shift(-4)).or_insert(0) += m;
                } else {
                    return Err(Error::NotFactorable {
                        component: node,
                        detail: format!("no dictionary generator can carry the factor at {p}"),
                    });
                }
            }
        }
    } else if dict.contains(&GenKind::A) {
        let mut work = slots_of(cd, x)?;
        let mut budget = FACTOR_BUDGET;
        loop {
            let top = work
                .iter()
                .enumerate()
                .filter_map(|(ci, w)| top_slot(w).map(|(p, m)| (ci, p, m)))
                .max_by_key(|(ci, p, _)| (p.qh, std::cmp::Reverse(*ci), p.eps, p.ue));
            let Some((ci, p, m)) = top else { break };
            if budget == 0 {
                return Err(Error::NotFactorable {
                    component: cd.i0[ci],
                    detail: "factorization budget exhausted".into(),
                });
            }
            budget -= 1;
            let node = cd.i0[ci];
            // global top of A_{i,a} is its pole at a·q², component i
            let a = canonical_param(cd, node, &p.q_shift(-4));
            let sym = GenSym {
                kind: GenKind::A,
                node,
                param: a,
            };
            let contrib = slots_of(cd, &gen_build(cd, &sym)?)?;
            mono.mul_gen(sym, -m);
            for (w, c) in work.iter_mut().zip(contrib) {
                for (cp, cm) in c {
                    let e = w.entry(cp).or_insert(0);
                    *e -= cm * (-m);
                    if *e == 0 {
                        w.remove(&cp);
                    }
                }
            }
        }
    } else {
        return Err(Error::Input("empty factorization dictionary".into()));
    }

    // attach γ so that constants match, then certify by re-evaluation
    let bare = lw_eval(cd, &mono)?;
    for (idx, g) in mono.gamma.iter_mut().enumerate() {
        *g = x.comps[idx].value0().mul(&bare.comps[idx].value0().inv()?);
    }
    let check = lw_eval(cd, &mono)?;
    if &check != x {
        let bad = check
            .comps
            .iter()
            .zip(&x.comps)
            .position(|(a, b)| a != b)
            .unwrap_or(0);
        return Err(Error::NotFactorable {
            component: cd.i0[bad],
            detail: "re-evaluation of the candidate monomial does not reproduce the input"
                .into(),
        });
    }
    Ok(mono)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::cartan_data;
    use crate::scalar::Level;

    fn data(tok: &str) -> CartanData {
        cartan_data(TwistedType::from_token(tok).unwrap()).unwrap()
    }

    fn qp(level: Level, k: i64) -> SpectralParam {
        SpectralParam::q_pow(level, k)
    }

    #[test]
    fn y_nonfixed_shape() {
        // A₂⁽²⁾: Y_{1,a} component = q(1−azq^{−1})/(1−azq)
        let cd = data("A2-2");
        let a = qp(Level::L2, 1);
        let y = gen_y(&cd, 1, &a).unwrap();
        let expect = RationalFactored::from_parts(
            Scalar::q_pow(Level::L2, 1),
            [(a.q_shift(-2), 1), (a.q_shift(2), -1)],
        )
        .unwrap();
        assert_eq!(y.comps[0], expect);
    }

    #[test]
    fn y_fixed_factors_completely() {
        // A₅⁽²⁾, i = 3 = σ(3), a = 1:
        // q²(1−z²q^{−2})/(1−z²q²) = q²(1−zq^{−1})(1+zq^{−1}) / ((1−zq)(1+zq))
        let cd = data("A5-2");
        let a = SpectralParam::one(Level::L2);
        let y = gen_y(&cd, 3, &a).unwrap();
        let expect = RationalFactored::from_parts(
            Scalar::q_pow(Level::L2, 2),
            [
                (SpectralParam::new(Level::L2, 0, -2, 0), 1),
                (SpectralParam::new(Level::L2, 1, -2, 0), 1),
                (SpectralParam::new(Level::L2, 0, 2, 0), -1),
                (SpectralParam::new(Level::L2, 1, 2, 0), -1),
            ],
        )
        .unwrap();
        assert_eq!(y.comps[2], expect);
        // oracle: expansions of the factored form match 1 − z²q^{∓2} directly
        let num = RationalFactored::from_parts(
            Scalar::one(Level::L2),
            [
                (SpectralParam::new(Level::L2, 0, -2, 0), 1),
                (SpectralParam::new(Level::L2, 1, -2, 0), 1),
            ],
        )
        .unwrap();
        let c = num.expand_zero(3);
        assert!(c[1].is_zero());
        assert_eq!(c[2], Scalar::q_pow(Level::L2, -2).neg());
        assert!(c[3].is_zero());
    }

    #[test]
    fn ytilde_strips_constant() {
        let cd = data("A2-2");
        let a = qp(Level::L2, 3);
        let y = gen_y(&cd, 1, &a).unwrap();
        let yt = gen_ytilde(&cd, 1, &a).unwrap();
        let ratio = lw_mul(&yt, &lw_inv(&y).unwrap()).unwrap();
        assert!(ratio.is_constant());
        assert_eq!(ratio.comps[0].constant, Scalar::q_pow(Level::L2, -1));
    }

    #[test]
    fn psi_shapes() {
        let a22 = data("A2-2");
        let psi = gen_psi(&a22, 1, &qp(Level::L2, 0)).unwrap();
        assert_eq!(lw_degree(&psi), vec![1]);

        let a52 = data("A5-2");
        let a = qp(Level::L2, 0);
        let psi = gen_psi(&a52, 3, &a).unwrap();
        assert_eq!(lw_degree(&psi), vec![0, 0, 2]);
        // 1 − a²z² = (1−az)(1+az)
        let expect = RationalFactored::from_parts(
            Scalar::one(Level::L2),
            [(a, 1), (a.neg(), 1)],
        )
        .unwrap();
        assert_eq!(psi.comps[2], expect);

        let d43 = data("D4-3");
        let psi = gen_psi(&d43, 2, &qp(Level::L6, 1)).unwrap();
        assert_eq!(lw_degree(&psi), vec![0, 3]);
    }

    #[test]
    fn a22_simple_root_rational_form() {
        // A_{1,a} = Y_{1,aq}Y_{1,aq^{-1}}Y_{1,-a}^{-1}
        //         = q·(1−azq^{−2})(1+azq) / ((1−azq²)(1+azq^{−1}))
        let cd = data("A2-2");
        let a = qp(Level::L2, 0);
        let aa = gen_a(&cd, 1, &a).unwrap();
        let expect = RationalFactored::from_parts(
            Scalar::q_pow(Level::L2, 1),
            [
                (a.q_shift(-4), 1),
                (a.neg().q_shift(2), 1),
                (a.q_shift(4), -1),
                (a.neg().q_shift(-2), -1),
            ],
        )
        .unwrap();
        assert_eq!(aa.comps[0], expect);
    }

    #[test]
    fn generators_have_degree_zero() {
        for tok in ["A2-2", "A4-2", "A5-2", "D3-2", "E6-2", "D4-3"] {
            let cd = data(tok);
            let a = SpectralParam::new(cd.level, 0, 3, 0);
            for &i in &cd.i0 {
                for lw in [
                    gen_y(&cd, i, &a).unwrap(),
                    gen_ytilde(&cd, i, &a).unwrap(),
                    gen_a(&cd, i, &a).unwrap(),
                ] {
                    assert!(lw_degree(&lw).iter().all(|d| *d == 0), "{tok} node {i}");
                }
                // Y and A satisfy the value0·value_inf = 1 rationality condition
                for lw in [gen_y(&cd, i, &a).unwrap(), gen_a(&cd, i, &a).unwrap()] {
                    for (v0, vi) in lw_value0(&lw).iter().zip(lw_value_inf(&lw)) {
                        assert!(v0.mul(&vi).is_one(), "{tok} node {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn group_laws_smoke() {
        let cd = data("A4-2");
        let x = gen_y(&cd, 1, &qp(Level::L2, 1)).unwrap();
        let y = gen_psi(&cd, 2, &qp(Level::L2, -2)).unwrap();
        let xy = lw_mul(&x, &y).unwrap();
        assert_eq!(xy, lw_mul(&y, &x).unwrap());
        assert!(lw_mul(&x, &lw_inv(&x).unwrap()).unwrap().is_one());
        // Ψ_{1,a}·Ψ_{1,b} has disjoint factors, degree 2
        let p1 = gen_psi(&cd, 1, &qp(Level::L2, 0)).unwrap();
        let p2 = gen_psi(&cd, 1, &qp(Level::L2, 1)).unwrap();
        assert_eq!(lw_degree(&lw_mul(&p1, &p2).unwrap())[0], 2);
    }

    #[test]
    fn degree_examples() {
        let cd = data("A2-2");
        // Ψ_{1,a}^{-1}·Ỹ_{1,b} has degree −1
        let x = lw_mul(
            &lw_inv(&gen_psi(&cd, 1, &qp(Level::L2, 0)).unwrap()).unwrap(),
            &gen_ytilde(&cd, 1, &qp(Level::L2, 2)).unwrap(),
        )
        .unwrap();
        assert_eq!(lw_degree(&x), vec![-1]);
    }

    #[test]
    fn factor_round_trip_canonical() {
        let cd = data("A2-2");
        let mut m = GenMonomial::one(&cd);
        m.mul_gen(
            GenSym {
                kind: GenKind::Y,
                node: 1,
                param: qp(Level::L2, 1),
            },
            1,
        );
        m.mul_gen(
            GenSym {
                kind: GenKind::Psi,
                node: 1,
                param: qp(Level::L2, 3),
            },
            2,
        );
        let x = lw_eval(&cd, &m).unwrap();
        let f = lw_factor(&cd, &x, &[GenKind::Y, GenKind::Ytilde, GenKind::Psi, GenKind::A])
            .unwrap();
        assert_eq!(f, m);
        assert_eq!(lw_eval(&cd, &f).unwrap(), x);
    }

    #[test]
    fn factor_all_ones() {
        let cd = data("D4-3");
        let one = LWeight::one(&cd);
        let f = lw_factor(&cd, &one, &[GenKind::Y, GenKind::Psi]).unwrap();
        assert!(f.exps.is_empty());
        assert!(f.gamma_is_trivial());
    }

    #[test]
    fn factor_off_grid_rejected() {
        // a u-deformed parameter lies outside μ_L·q^(ℤ/2)
        let cd = data("A2-2");
        let off = SpectralParam::new(Level::L2, 0, 0, 1);
        let x = LWeight {
            ty: cd.ty,
            comps: vec![RationalFactored::from_parts(
                Scalar::one(Level::L2),
                [(off, -1)],
            )
            .unwrap()],
        };
        assert!(matches!(
            lw_factor(&cd, &x, &[GenKind::Y, GenKind::Psi]),
            Err(Error::OffGrid(_))
        ));
    }

    #[test]
    fn factor_fixed_node_orbit_failure() {
        // a lone (1−az) at a fixed node cannot close into a ζ-orbit
        let cd = data("A5-2");
        let mut x = LWeight::one(&cd);
        x.comps[2] = RationalFactored::from_parts(
            Scalar::one(Level::L2),
            [(qp(Level::L2, 0), 1)],
        )
        .unwrap();
        assert!(matches!(
            lw_factor(&cd, &x, &[GenKind::Y, GenKind::Psi]),
            Err(Error::NotFactorable { .. })
        ));
    }

    #[test]
    fn shift_examples() {
        let cd = data("A2-2");
        let b = qp(Level::L2, 2);
        let a = qp(Level::L2, 0);
        let psi = gen_psi(&cd, 1, &b).unwrap();
        // μ′ = −ω₁^∨ → multiply by (1−az): degree 2
        let mu = Coweight { coeffs: vec![-1] };
        let shifted = shift_lweight(&cd, &psi, &mu, &a).unwrap();
        assert_eq!(lw_degree(&shifted), vec![2]);
        assert_eq!(
            shifted,
            lw_mul(&psi, &gen_psi(&cd, 1, &a).unwrap()).unwrap()
        );
        // μ′ = 0 is the identity
        assert_eq!(
            shift_lweight(&cd, &psi, &Coweight::zero(1), &a).unwrap(),
            psi
        );
        // composition in μ′
        let mu2 = Coweight { coeffs: vec![-2] };
        let twice = shift_lweight(
            &cd,
            &shift_lweight(&cd, &psi, &mu, &a).unwrap(),
            &mu,
            &a,
        )
        .unwrap();
        assert_eq!(twice, shift_lweight(&cd, &psi, &mu2, &a).unwrap());
        // divisibility failure at a fixed node
        let a52 = data("A5-2");
        let psi3 = gen_psi(&a52, 3, &a).unwrap();
        let bad = Coweight { coeffs: vec![0, 0, -1] };
        assert!(matches!(
            shift_lweight(&a52, &psi3, &bad, &a),
            Err(Error::Divisibility { node: 3, .. })
        ));
    }

    #[test]
    fn expand_wrapper() {
        let cd = data("A2-2");
        let a = qp(Level::L2, 1);
        let x = lw_inv(&gen_psi(&cd, 1, &a).unwrap()).unwrap();
        // 1/(1−az): geometric at zero, −a^{-m} tail at infinity
        let at0 = lw_expand(&cd, &x, 1, ExpandAt::Zero, 3).unwrap();
        for (m, c) in &at0 {
            assert_eq!(*c, a.pow(*m).to_scalar());
        }
        let atinf = lw_expand(&cd, &x, 1, ExpandAt::Infinity, 2).unwrap();
        assert_eq!(atinf[0], (-1, a.inv().to_scalar().neg()));
        assert_eq!(atinf[1].0, -2);
        assert!(lw_expand(&cd, &x, 9, ExpandAt::Zero, 1).is_err());
    }

    #[test]
    fn coproduct_examples() {
        let cd = data("A2-2");
        let a = qp(Level::L2, 0);
        let b = qp(Level::L2, 1);
        let pa = gen_psi(&cd, 1, &a).unwrap();
        let pb = gen_psi(&cd, 1, &b).unwrap();
        let cop = coproduct_hw(&pa, &pb).unwrap();
        // (1−az)(1−b·u·z)
        let expect = RationalFactored::from_parts(
            Scalar::one(Level::L2),
            [(a, 1), (b.u_shift(1), 1)],
        )
        .unwrap();
        assert_eq!(cop.comps[0], expect);
        assert_eq!(lw_degree(&cop), vec![2]);
        // specialization at u = 1 recovers the plain product
        assert_eq!(specialize_u1(&cop), lw_mul(&pa, &pb).unwrap());
    }

    #[test]
    fn fixed_node_zeta_invariance() {
        // Y_{i,a} = Y_{i,ζa} exactly when σ(i) = i
        let cd = data("D4-3");
        let a = qp(Level::L6, 1);
        let za = a.root_shift(2); // ζ₃·a
        assert_eq!(
            gen_y(&cd, 2, &a).unwrap(),
            gen_y(&cd, 2, &za).unwrap()
        );
        assert_ne!(
            gen_y(&cd, 1, &a).unwrap(),
            gen_y(&cd, 1, &za).unwrap()
        );
    }
}

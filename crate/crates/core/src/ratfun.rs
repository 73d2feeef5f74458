//! Factored rational functions in one variable z.
//!
//! The canonical form is constant·∏(1 − a·z)^{mult} with a monomial-unit
//! constant, distinct canonical parameters a and nonzero multiplicities.
//! This representation multiplies, inverts and cancels exactly; Taylor
//! expansions at z = 0 and z = ∞ are produced on demand.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::{Level, Scalar, SpectralParam};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalFactored {
    pub level: Level,
    /// value at z = 0; always a single-term unit
    pub constant: Scalar,
    /// (1 − a·z)^{mult} per canonical parameter a
    pub factors: BTreeMap<SpectralParam, i64>,
}

impl RationalFactored {
    pub fn one(level: Level) -> Self {
        RationalFactored {
            level,
            constant: Scalar::one(level),
            factors: BTreeMap::new(),
        }
    }

    /// A nonzero constant function.
    pub fn constant(c: Scalar) -> Result<Self, Error> {
        if !c.is_monomial() {
            return Err(Error::Input(format!(
                "constant of a factored rational function must be a monomial unit, got {c}"
            )));
        }
        Ok(RationalFactored {
            level: c.level,
            constant: c,
            factors: BTreeMap::new(),
        })
    }

    pub fn from_parts(
        constant: Scalar,
        factors: impl IntoIterator<Item = (SpectralParam, i64)>,
    ) -> Result<Self, Error> {
        let mut out = RationalFactored::constant(constant)?;
        for (a, m) in factors {
            out.mul_factor(&a, m);
        }
        Ok(out)
    }

    /// Multiply by (1 − a·z)^{m}, cancelling against existing factors.
    pub fn mul_factor(&mut self, a: &SpectralParam, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.factors.entry(*a).or_insert(0);
        *e += m;
        if *e == 0 {
            self.factors.remove(a);
        }
    }

    pub fn mul(&self, other: &RationalFactored) -> RationalFactored {
        let mut out = self.clone();
        out.constant = out.constant.mul(&other.constant);
        for (a, m) in &other.factors {
            out.mul_factor(a, *m);
        }
        out
    }

    pub fn inv(&self) -> Result<RationalFactored, Error> {
        let mut out = RationalFactored::constant(self.constant.inv()?)?;
        for (a, m) in &self.factors {
            out.mul_factor(a, -m);
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Result<RationalFactored, Error> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = RationalFactored::one(self.level);
        out.constant = base.constant.pow(k.abs())?;
        for (a, m) in &base.factors {
            out.mul_factor(a, m * k.abs());
        }
        Ok(out)
    }

    /// deg = Σ mult (numerator degree minus denominator degree).
    pub fn degree(&self) -> i64 {
        self.factors.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.constant.is_one() && self.factors.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.factors.values().all(|m| *m >= 0)
    }

    pub fn value0(&self) -> Scalar {
        self.constant.clone()
    }

    /// Leading behaviour at z = ∞: the coefficient of z^{deg}, i.e.
    /// constant·∏(−a)^{mult}. Always a monomial unit in factored form.
    pub fn value_inf(&self) -> Scalar {
        let mut out = self.constant.clone();
        for (a, m) in &self.factors {
            out = out.mul(&a.neg().to_scalar().pow(*m).expect("unit power"));
        }
        out
    }

    /// Taylor coefficients of z^0..z^order at z = 0.
    pub fn expand_zero(&self, order: usize) -> Vec<Scalar> {
        let mut coeffs = vec![Scalar::zero(self.level); order + 1];
        coeffs[0] = self.constant.clone();
        for (a, m) in &self.factors {
            apply_binomial(&mut coeffs, a, *m);
        }
        coeffs
    }

    /// Expansion at z = ∞ in powers of z^{−1}, starting at z^{deg}:
    /// returns (deg, [c_0, .., c_order]) meaning Σ_k c_k z^{deg−k}.
    pub fn expand_inf(&self, order: usize) -> (i64, Vec<Scalar>) {
        // f = value_inf · z^deg · ∏(1 − a^{-1} w)^{mult},  w = z^{-1}
        let mut coeffs = vec![Scalar::zero(self.level); order + 1];
        coeffs[0] = self.value_inf();
        for (a, m) in &self.factors {
            apply_binomial(&mut coeffs, &a.inv(), *m);
        }
        (self.degree(), coeffs)
    }

    /// Coefficient of z^m of the expansion at 0 (m ≥ 0 side of the current).
    pub fn coeff_at_zero(&self, m: usize) -> Scalar {
        self.expand_zero(m)[m].clone()
    }

    /// Substitute z ↦ z^{-1}; only defined for degree 0, where the result is
    /// again of the canonical shape.
    pub fn subst_z_inv(&self) -> Result<RationalFactored, Error> {
        if self.degree() != 0 {
            return Err(Error::Input(
                "z -> 1/z substitution requires a degree-0 factored function".into(),
            ));
        }
        let mut out = RationalFactored::constant(self.value_inf())?;
        for (a, m) in &self.factors {
            out.mul_factor(&a.inv(), *m);
        }
        Ok(out)
    }

    /// Substitute z ↦ z·u^{k} (the deformed-coproduct shift on the second
    /// tensor factor). Parameters pick up u-exponents; the constant term is
    /// unchanged.
    pub fn shift_z_u(&self, k: i64) -> RationalFactored {
        let mut out = RationalFactored::constant(self.constant.clone()).unwrap();
        for (a, m) in &self.factors {
            out.mul_factor(&a.u_shift(k), *m);
        }
        out
    }

    /// Specialize u = 1 and re-reduce (parameters may now collide).
    pub fn set_u_one(&self) -> RationalFactored {
        let mut out = RationalFactored::constant(self.constant.set_u_one()).unwrap();
        for (a, m) in &self.factors {
            out.mul_factor(&a.u_shift(-a.ue), *m);
        }
        out
    }
}

/// Multiply a truncated series by (1 − a·z)^{m} in place.
fn apply_binomial(coeffs: &mut [Scalar], a: &SpectralParam, m: i64) {
    let az = a.to_scalar();
    let n = coeffs.len();
    if m >= 0 {
        for _ in 0..m {
            // new[k] = old[k] − a·old[k−1]
            for k in (1..n).rev() {
                let t = coeffs[k - 1].mul(&az);
                coeffs[k] = coeffs[k].sub(&t);
            }
        }
    } else {
        for _ in 0..(-m) {
            // s[k] = old[k] + a·s[k−1]
            for k in 1..n {
                let t = coeffs[k - 1].mul(&az);
                coeffs[k] = coeffs[k].add(&t);
            }
        }
    }
}

impl fmt::Display for RationalFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            parts.push(format!("{}", self.constant));
        }
        for (a, m) in &self.factors {
            let p = a.to_string();
            let body = match p.strip_prefix('-') {
                Some(rest) => format!("(1+{rest}*z)"),
                None => format!("(1-{p}*z)"),
            };
            if *m == 1 {
                parts.push(body);
            } else {
                parts.push(format!("{body}^{m}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycRat;

    fn p(qh: i64) -> SpectralParam {
        SpectralParam::new(Level::L2, 0, qh, 0)
    }

    #[test]
    fn geometric_series() {
        // 1/(1−az) at zero, order 3 → (1, a, a², a³)
        let a = p(2); // a = q
        let f = RationalFactored::from_parts(Scalar::one(Level::L2), [(a, -1)]).unwrap();
        let c = f.expand_zero(3);
        for (k, ck) in c.iter().enumerate() {
            assert_eq!(*ck, a.pow(k as i64).to_scalar());
        }
    }

    #[test]
    fn geometric_series_at_infinity() {
        // 1/(1−az) at infinity → −a^{−1}z^{−1} − a^{−2}z^{−2} − …
        let a = p(2);
        let f = RationalFactored::from_parts(Scalar::one(Level::L2), [(a, -1)]).unwrap();
        let (deg, c) = f.expand_inf(2);
        assert_eq!(deg, -1);
        assert_eq!(c[0], a.inv().to_scalar().neg());
        assert_eq!(c[1], a.pow(-2).to_scalar().neg());
        assert_eq!(c[2], a.pow(-3).to_scalar().neg());
    }

    #[test]
    fn polynomial_expansions_agree() {
        // expansion of 1−az at both ends carries the same coefficients
        let a = p(-3);
        let f = RationalFactored::from_parts(Scalar::one(Level::L2), [(a, 1)]).unwrap();
        let at0 = f.expand_zero(4);
        let (deg, atinf) = f.expand_inf(4);
        assert_eq!(deg, 1);
        // z^1 and z^0 coefficients match; everything else vanishes
        assert_eq!(at0[1], atinf[0]);
        assert_eq!(at0[0], atinf[1]);
        assert!(at0[2..].iter().all(|c| c.is_zero()));
        assert!(atinf[2..].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn degree_and_values() {
        let f = RationalFactored::from_parts(
            Scalar::q_pow(Level::L2, 1),
            [(p(-2), 1), (p(2), -1)],
        )
        .unwrap();
        assert_eq!(f.degree(), 0);
        assert_eq!(f.value0(), Scalar::q_pow(Level::L2, 1));
        // q·(−q^{−1})/(−q) = q^{−1}
        assert_eq!(f.value_inf(), Scalar::q_pow(Level::L2, -1));
        assert!(f.value0().mul(&f.value_inf()).is_one());
    }

    #[test]
    fn cancellation() {
        let f = RationalFactored::from_parts(Scalar::one(Level::L2), [(p(2), 1)]).unwrap();
        let g = f.inv().unwrap();
        assert!(f.mul(&g).is_one());
    }

    #[test]
    fn mixed_cyclotomic_coefficient_in_series() {
        // (1−az)(1−ζ₆az) has a genuinely cyclotomic z-coefficient
        let a = SpectralParam::new(Level::L6, 0, 0, 0);
        let b = SpectralParam::new(Level::L6, 1, 0, 0);
        let f =
            RationalFactored::from_parts(Scalar::one(Level::L6), [(a, 1), (b, 1)]).unwrap();
        let c = f.expand_zero(2);
        let expect1 = Scalar::monomial(
            Level::L6,
            0,
            0,
            CycRat::one().add(&CycRat::zeta_pow(Level::L6, 1)).neg(),
        );
        assert_eq!(c[1], expect1);
    }
}

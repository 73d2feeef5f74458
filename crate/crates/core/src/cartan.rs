//! Static data for the six twisted affine families.
//!
//! A twisted type is a pair (𝔤, σ) with 𝔤 simply laced and σ a diagram
//! automorphism of order M ∈ {2, 3}. The admissible families are A₂⁽²⁾,
//! A₂ₙ⁽²⁾ (n ≥ 2), A₂ₙ₋₁⁽²⁾ (n ≥ 3), Dₙ₊₁⁽²⁾ (n ≥ 2), E₆⁽²⁾ and D₄⁽³⁾.
//! The affine node carries index 0; the finite representatives I₀ follow
//! the smallest-in-orbit convention.
//!
//! The folded affine Cartan matrices are hardcoded from the standard tables
//! and cross-validated at construction time against symmetrizability with
//! the d-vector and against the marks relation; the two invariants pin the
//! matrix uniquely given the diagram.

#![allow(clippy::needless_range_loop)] // matrix code indexes row/column pairs
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Zero};

use crate::error::Error;
use crate::ratfun::RationalFactored;
use crate::scalar::{Level, Scalar, SpectralParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// A₂ₙ⁽²⁾ (n ≥ 1; n = 1 is A₂⁽²⁾)
    AEven,
    /// A₂ₙ₋₁⁽²⁾ (n ≥ 3)
    AOdd,
    /// Dₙ₊₁⁽²⁾ (n ≥ 2)
    D,
    /// E₆⁽²⁾
    E6,
    /// D₄⁽³⁾
    D4Triple,
}

/// One admissible (family, n, M) instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistedType {
    pub family: Family,
    /// rank parameter: |I₀| for the A/D families, fixed for E₆⁽²⁾ and D₄⁽³⁾
    pub n: usize,
    /// twist order
    pub m: i64,
}

impl TwistedType {
    pub fn new(family: Family, n: usize, m: i64) -> Result<Self, Error> {
        let ok = match family {
            Family::AEven => n >= 1 && m == 2,
            Family::AOdd => n >= 3 && m == 2,
            Family::D => n >= 2 && m == 2,
            Family::E6 => n == 4 && m == 2,
            Family::D4Triple => n == 2 && m == 3,
        };
        if ok {
            Ok(TwistedType { family, n, m })
        } else {
            Err(Error::InadmissibleType(format!(
                "no twisted affine type with family {family:?}, n = {n}, M = {m}"
            )))
        }
    }

    /// Rank of the simply-laced 𝔤.
    pub fn g_rank(&self) -> usize {
        match self.family {
            Family::AEven => 2 * self.n,
            Family::AOdd => 2 * self.n - 1,
            Family::D => self.n + 1,
            Family::E6 => 6,
            Family::D4Triple => 4,
        }
    }

    pub fn level(&self) -> Level {
        Level::for_twist(self.m)
    }

    /// Parse a type token: family letter + 𝔤-rank + "-" + twist order,
    /// e.g. `A2-2`, `A5-2`, `D5-2`, `E6-2`, `D4-3`.
    pub fn from_token(tok: &str) -> Result<Self, Error> {
        let bad = || Error::InadmissibleType(format!("unrecognized type token `{tok}`"));
        let (head, twist) = tok.split_once('-').ok_or_else(bad)?;
        let m: i64 = twist.parse().map_err(|_| bad())?;
        if head.len() < 2 {
            return Err(bad());
        }
        let letter = &head[..1];
        let rank: usize = head[1..].parse().map_err(|_| bad())?;
        match (letter, m) {
            ("A", 2) => {
                if rank >= 2 && rank.is_multiple_of(2) {
                    TwistedType::new(Family::AEven, rank / 2, 2)
                } else if rank >= 5 && rank % 2 == 1 {
                    TwistedType::new(Family::AOdd, rank.div_ceil(2), 2)
                } else {
                    Err(Error::InadmissibleType(format!(
                        "A{rank}-2 is not an admissible twisted type"
                    )))
                }
            }
            ("D", 2) if rank >= 3 => TwistedType::new(Family::D, rank - 1, 2),
            ("D", 3) if rank == 4 => TwistedType::new(Family::D4Triple, 2, 3),
            ("E", 2) if rank == 6 => TwistedType::new(Family::E6, 4, 2),
            _ => Err(bad()),
        }
    }

    pub fn token(&self) -> String {
        format!("{}{}-{}", match self.family {
            Family::AEven | Family::AOdd => "A",
            Family::D | Family::D4Triple => "D",
            Family::E6 => "E",
        }, self.g_rank(), self.m)
    }

    /// The six minimal-rank instances used by the verification suites.
    pub fn minimal_ranks() -> Vec<TwistedType> {
        ["A2-2", "A4-2", "A5-2", "D3-2", "E6-2", "D4-3"]
            .iter()
            .map(|t| TwistedType::from_token(t).unwrap())
            .collect()
    }
}

impl fmt::Display for TwistedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Integral coweight μ = Σ m_i ω_i^∨ in the ω^∨-basis over I₀.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight {
    pub coeffs: Vec<i64>,
}

impl Coweight {
    pub fn zero(len: usize) -> Self {
        Coweight { coeffs: vec![0; len] }
    }

    pub fn fundamental(len: usize, idx: usize) -> Self {
        let mut c = vec![0; len];
        c[idx] = 1;
        Coweight { coeffs: c }
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Coweight {
        Coweight {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// All derived constants of one twisted family instance.
#[derive(Debug, Clone)]
pub struct CartanData {
    pub ty: TwistedType,
    /// node set of 𝔤 is 1..=rank
    pub rank: usize,
    /// σ as a 1-based table: sigma[i-1] = σ(i)
    pub sigma: Vec<usize>,
    /// Cartan matrix of 𝔤, 1-based via `c(i, j)`
    pub c: Vec<Vec<i64>>,
    /// orbit representatives, ascending
    pub i0: Vec<usize>,
    /// folded affine Cartan matrix over Î_σ = {0} ⊔ I₀ (index 0 = affine node)
    pub csigma: Vec<Vec<i64>>,
    /// symmetrizer entries d_i over Î_σ
    pub d: Vec<BigRational>,
    /// marks a_i over Î_σ, normalized by a₀ = 1
    pub marks: Vec<i64>,
    /// N_i over I₀ (M at fixed nodes, 1 otherwise)
    pub n_vec: Vec<i64>,
    /// ι_i = 1 + (M−1)δ_{σ(i)=i} over I₀
    pub iota: Vec<i64>,
    pub level: Level,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Build the fully populated constant table for an admissible type.
pub fn cartan_data(ty: TwistedType) -> Result<CartanData, Error> {
    // Re-validate so stale TwistedType values cannot slip through.
    let ty = TwistedType::new(ty.family, ty.n, ty.m)?;
    let rank = ty.g_rank();
    let n = match ty.family {
        Family::AEven | Family::AOdd | Family::D => ty.n,
        Family::E6 => 4,
        Family::D4Triple => 2,
    };

    // adjacency of 𝔤 (Dynkin diagram edges)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match ty.family {
        Family::AEven | Family::AOdd => {
            for i in 1..rank {
                edges.push((i, i + 1));
            }
        }
        Family::D => {
            // chain 1..n−1, fork at n−1 toward n and n+1
            for i in 1..ty.n - 1 {
                edges.push((i, i + 1));
            }
            edges.push((ty.n - 1, ty.n));
            edges.push((ty.n - 1, ty.n + 1));
        }
        Family::E6 => {
            edges.extend([(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)]);
        }
        Family::D4Triple => {
            edges.extend([(1, 2), (2, 3), (2, 4)]);
        }
    }
    let mut c = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
    }
    for (i, j) in edges {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    }

    // σ as read off the diagram labels
    let sigma: Vec<usize> = match ty.family {
        Family::AEven => (1..=rank).map(|i| 2 * ty.n + 1 - i).collect(),
        Family::AOdd => (1..=rank).map(|i| 2 * ty.n - i).collect(),
        Family::D => (1..=rank)
            .map(|i| {
                if i == ty.n {
                    ty.n + 1
                } else if i == ty.n + 1 {
                    ty.n
                } else {
                    i
                }
            })
            .collect(),
        Family::E6 => vec![6, 5, 3, 4, 2, 1],
        Family::D4Triple => vec![3, 2, 4, 1],
    };

    let i0: Vec<usize> = (1..=n).collect();

    // hardcoded folded affine matrix, d-vector and marks per family
    let size = n + 1;
    let mut csigma = vec![vec![0i64; size]; size];
    for i in 0..size {
        csigma[i][i] = 2;
    }
    let mut put = |i: usize, j: usize, v: i64| {
        csigma[i][j] = v;
    };
    let (d, marks): (Vec<BigRational>, Vec<i64>) = match ty.family {
        Family::AEven if ty.n == 1 => {
            put(0, 1, -1);
            put(1, 0, -4);
            (vec![ratio(2, 1), ratio(1, 2)], vec![1, 2])
        }
        Family::AEven => {
            put(0, 1, -1);
            put(1, 0, -2);
            for i in 1..n - 1 {
                put(i, i + 1, -1);
                put(i + 1, i, -1);
            }
            put(n - 1, n, -1);
            put(n, n - 1, -2);
            let mut d = vec![ratio(2, 1)];
            d.extend(std::iter::repeat_n(BigRational::one(), n - 1));
            d.push(ratio(1, 2));
            let mut a = vec![1];
            a.extend(std::iter::repeat_n(2, n));
            (d, a)
        }
        Family::AOdd => {
            put(0, 2, -1);
            put(2, 0, -1);
            put(1, 2, -1);
            put(2, 1, -1);
            for i in 2..n - 1 {
                put(i, i + 1, -1);
                put(i + 1, i, -1);
            }
            put(n - 1, n, -2);
            put(n, n - 1, -1);
            let mut d = vec![BigRational::one(); n];
            d.push(ratio(2, 1));
            let mut a = vec![1, 1];
            a.extend(std::iter::repeat_n(2, n - 2));
            a.push(1);
            (d, a)
        }
        Family::D => {
            put(0, 1, -2);
            put(1, 0, -1);
            for i in 1..n - 1 {
                put(i, i + 1, -1);
                put(i + 1, i, -1);
            }
            put(n - 1, n, -1);
            put(n, n - 1, -2);
            let mut d = vec![BigRational::one()];
            d.extend(std::iter::repeat_n(ratio(2, 1), n - 1));
            d.push(BigRational::one());
            (d, vec![1; n + 1])
        }
        Family::E6 => {
            for (i, j) in [(0, 1), (1, 2), (3, 4)] {
                put(i, j, -1);
                put(j, i, -1);
            }
            put(2, 3, -2);
            put(3, 2, -1);
            (
                vec![
                    BigRational::one(),
                    BigRational::one(),
                    BigRational::one(),
                    ratio(2, 1),
                    ratio(2, 1),
                ],
                vec![1, 2, 3, 2, 1],
            )
        }
        Family::D4Triple => {
            put(0, 1, -1);
            put(1, 0, -1);
            put(1, 2, -3);
            put(2, 1, -1);
            (
                vec![BigRational::one(), BigRational::one(), ratio(3, 1)],
                vec![1, 2, 1],
            )
        }
    };

    let n_vec: Vec<i64> = i0
        .iter()
        .map(|&i| if sigma[i - 1] == i { ty.m } else { 1 })
        .collect();
    let iota: Vec<i64> = i0
        .iter()
        .map(|&i| 1 + (ty.m - 1) * i64::from(sigma[i - 1] == i))
        .collect();

    let cd = CartanData {
        ty,
        rank,
        sigma,
        c,
        i0,
        csigma,
        d,
        marks,
        n_vec,
        iota,
        level: ty.level(),
    };
    cd.validate()?;
    Ok(cd)
}

impl CartanData {
    /// Cross-validate the hardcoded tables against the defining invariants.
    fn validate(&self) -> Result<(), Error> {
        if let Err((i, j)) = check_symmetrizable(&self.csigma, &self.d) {
            return Err(Error::Internal(format!(
                "{}: diag(d)·Cσ not symmetric at ({i},{j})",
                self.ty
            )));
        }
        if let Err(j) = check_marks(&self.csigma, &self.d, &self.marks) {
            return Err(Error::Internal(format!(
                "{}: marks relation fails in column {j}",
                self.ty
            )));
        }
        // σ must be a diagram automorphism of 𝔤
        for i in 1..=self.rank {
            for j in 1..=self.rank {
                if self.c(i, j) != self.c(self.sigma(i), self.sigma(j)) {
                    return Err(Error::Internal(format!(
                        "{}: σ is not a diagram automorphism at ({i},{j})",
                        self.ty
                    )));
                }
            }
        }
        // representative convention: σ^k(i) ≥ i for i ∈ I₀
        for &i in &self.i0 {
            let mut j = i;
            for _ in 0..self.ty.m {
                j = self.sigma(j);
                if j < i {
                    return Err(Error::Internal(format!(
                        "{}: node {i} is not the smallest of its orbit",
                        self.ty
                    )));
                }
            }
        }
        // N_i = ι_i
        if self.n_vec != self.iota {
            return Err(Error::Internal(format!("{}: N ≠ ι", self.ty)));
        }
        Ok(())
    }

    pub fn n_i0(&self) -> usize {
        self.i0.len()
    }

    /// Entry of the Cartan matrix of 𝔤 (1-based node labels).
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.c[i - 1][j - 1]
    }

    pub fn sigma(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    pub fn sigma_pow(&self, i: usize, s: i64) -> usize {
        let mut j = i;
        for _ in 0..s.rem_euclid(self.ty.m) {
            j = self.sigma(j);
        }
        j
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.sigma(i) == i
    }

    /// Position of a node inside the I₀ list.
    pub fn i0_index(&self, node: usize) -> Result<usize, Error> {
        self.i0
            .iter()
            .position(|&x| x == node)
            .ok_or_else(|| Error::NodeOutOfRange {
                node,
                context: format!("I0 of {}", self.ty),
            })
    }

    pub fn iota_of(&self, node: usize) -> Result<i64, Error> {
        Ok(self.iota[self.i0_index(node)?])
    }

    /// ζ_L-exponent of the twist root of unity ζ = ζ_M.
    pub fn zeta_exp(&self) -> i64 {
        self.level.order() / self.ty.m
    }

    /// Finite part of the folded matrix (rows/columns over I₀).
    pub fn csigma_finite(&self) -> Vec<Vec<i64>> {
        let n = self.n_i0();
        (1..=n)
            .map(|i| (1..=n).map(|j| self.csigma[i][j]).collect())
            .collect()
    }

    /// α_i(μ) in the ω^∨-basis.
    pub fn pairing(&self, mu: &Coweight, i0_idx: usize) -> i64 {
        mu.coeffs[i0_idx]
    }

    /// Sum Σ_{s=1}^{M} C_{i,σ^s(j)} appearing in the k-current relation.
    pub fn c_orbit_sum(&self, i: usize, j: usize) -> i64 {
        (1..=self.ty.m).map(|s| self.c(i, self.sigma_pow(j, s))).sum()
    }
}

/// diag(d)·C symmetric, exactly; returns the first offending entry.
pub fn check_symmetrizable(
    csigma: &[Vec<i64>],
    d: &[BigRational],
) -> Result<(), (usize, usize)> {
    let n = csigma.len();
    for i in 0..n {
        for j in 0..n {
            let lhs = &d[i] * BigRational::from_integer(csigma[i][j].into());
            let rhs = &d[j] * BigRational::from_integer(csigma[j][i].into());
            if lhs != rhs {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// Σ_i a_i d_i C_{ij} = 0 for every column j; returns the first bad column.
pub fn check_marks(csigma: &[Vec<i64>], d: &[BigRational], marks: &[i64]) -> Result<(), usize> {
    let n = csigma.len();
    for j in 0..n {
        let mut s = BigRational::zero();
        for i in 0..n {
            s += BigRational::from_integer(marks[i].into())
                * &d[i]
                * BigRational::from_integer(csigma[i][j].into());
        }
        if !s.is_zero() {
            return Err(j);
        }
    }
    Ok(())
}

/// σ-orbit of a node, representative first.
pub fn sigma_orbit(cd: &CartanData, i: usize) -> Result<Vec<usize>, Error> {
    if i == 0 || i > cd.rank {
        return Err(Error::NodeOutOfRange {
            node: i,
            context: format!("I of {}", cd.ty),
        });
    }
    let mut orbit = vec![i];
    let mut j = cd.sigma(i);
    while j != i {
        orbit.push(j);
        j = cd.sigma(j);
    }
    let rep = *orbit.iter().min().unwrap();
    let pos = orbit.iter().position(|&x| x == rep).unwrap();
    orbit.rotate_left(pos);
    Ok(orbit)
}

/// Bivariate polynomial in (u₁, u₂) over Scalar, for the relation prefactors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    pub level: Level,
    pub coeffs: BTreeMap<(u32, u32), Scalar>,
}

impl BiPoly {
    pub fn zero(level: Level) -> Self {
        BiPoly {
            level,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(level: Level) -> Self {
        let mut p = BiPoly::zero(level);
        p.add_term(0, 0, Scalar::one(level));
        p
    }

    pub fn add_term(&mut self, e1: u32, e2: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry((e1, e2)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.neg());
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.level);
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                out.add_term(a1 + a2, b1 + b2, c1.mul(c2));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree when every monomial shares it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for &(a, b) in self.coeffs.keys() {
            match deg {
                None => deg = Some(a + b),
                Some(d) if d == a + b => {}
                _ => return None,
            }
        }
        deg
    }

    /// Apply u₁ ↦ u₁u^{−1}, u₂ ↦ u₂u^{−1}: each coefficient picks up
    /// u^{−(e₁+e₂)} through the scalar ring's u-exponent.
    pub fn rescale_u(&self) -> BiPoly {
        let mut out = BiPoly::zero(self.level);
        for (&(a, b), c) in &self.coeffs {
            let shift = Scalar::monomial(
                self.level,
                0,
                -i64::from(a + b),
                crate::scalar::CycRat::one(),
            );
            out.add_term(a, b, c.mul(&shift));
        }
        out
    }

    /// Multiply every coefficient by u^{k}.
    pub fn mul_u_power(&self, k: i64) -> BiPoly {
        let mut out = BiPoly::zero(self.level);
        let shift = Scalar::monomial(self.level, 0, k, crate::scalar::CycRat::one());
        for (&(a, b), c) in &self.coeffs {
            out.add_term(a, b, c.mul(&shift));
        }
        out
    }

    /// Exact division by a polynomial whose u₁-leading coefficient is a
    /// monomial unit; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &BiPoly) -> Result<BiPoly, Error> {
        let lead = divisor
            .coeffs
            .iter()
            .max_by_key(|(&(a, _), _)| a)
            .ok_or_else(|| Error::Internal("division by zero polynomial".into()))?;
        let (&(la, lb), lc) = lead;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(self.level);
        loop {
            let top = rem.coeffs.iter().max_by_key(|(&(a, _), _)| a);
            match top {
                None => break,
                Some((&(a, b), c)) => {
                    if a < la || b < lb {
                        return Err(Error::Internal(format!(
                            "polynomial division leaves remainder {rem:?}"
                        )));
                    }
                    let qc = c.mul(&lc_inv);
                    let (qa, qb) = (a - la, b - lb);
                    let mut qterm = BiPoly::zero(self.level);
                    qterm.add_term(qa, qb, qc);
                    rem = rem.sub(&qterm.mul(divisor));
                    quot.add_term(qa, qb, qterm.coeffs[&(qa, qb)].clone());
                }
            }
        }
        Ok(quot)
    }
}

/// Relation constant d_{i,j} of the Serre prefactor case list.
pub fn dij(cd: &CartanData, i: usize, j: usize) -> Result<BigRational, Error> {
    cd.i0_index(i)?;
    cd.i0_index(j)?;
    let cis = cd.c(i, cd.sigma(i));
    Ok(match cis {
        2 => ratio(1, 2),
        0 if !cd.is_fixed(j) => ratio(1, 2 * cd.ty.m),
        0 => ratio(1, 2),
        -1 => ratio(1, 8),
        _ => return Err(Error::Internal(format!("unexpected C(i,σ(i)) = {cis}"))),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, k: i64) -> i64 {
        match self {
            Sign::Plus => k,
            Sign::Minus => -k,
        }
    }
}

/// The Serre-relation prefactor P_{i,j}^{±}(u₁, u₂).
///
/// In the quotient case the division (u₁^M q^{±2M} − u₂^M)/(u₁q^{±2} − u₂)
/// is performed exactly and a nonzero remainder is an internal error.
pub fn pij_polynomial(
    cd: &CartanData,
    i: usize,
    j: usize,
    sign: Sign,
) -> Result<BiPoly, Error> {
    cd.i0_index(i)?;
    cd.i0_index(j)?;
    let level = cd.level;
    let cis = cd.c(i, cd.sigma(i));
    match cis {
        2 => Ok(BiPoly::one(level)),
        0 if !cd.is_fixed(j) => Ok(BiPoly::one(level)),
        0 => {
            let m = cd.ty.m as u32;
            let mut dividend = BiPoly::zero(level);
            dividend.add_term(m, 0, Scalar::q_pow(level, sign.apply(2 * cd.ty.m)));
            dividend.add_term(0, m, Scalar::from_i64(level, -1));
            let mut divisor = BiPoly::zero(level);
            divisor.add_term(1, 0, Scalar::q_pow(level, sign.apply(2)));
            divisor.add_term(0, 1, Scalar::from_i64(level, -1));
            dividend.div_exact(&divisor)
        }
        -1 => {
            let mut p = BiPoly::zero(level);
            p.add_term(1, 0, Scalar::q_pow(level, sign.apply(1)));
            p.add_term(0, 1, Scalar::one(level));
            Ok(p)
        }
        _ => Err(Error::Internal(format!("unexpected C(i,σ(i)) = {cis}"))),
    }
}

/// g_{ij}(z) = ∏_{s=1}^{M} (q^{C_{i,σ^s(j)}} − ζ^s z) / (1 − ζ^s q^{C_{i,σ^s(j)}} z)
/// in reduced factored form.
pub fn g_function(cd: &CartanData, i: usize, j: usize) -> Result<RationalFactored, Error> {
    cd.i0_index(i)?;
    cd.i0_index(j)?;
    let level = cd.level;
    let ze = cd.zeta_exp();
    let mut constant = Scalar::one(level);
    let mut out = RationalFactored::one(level);
    for s in 1..=cd.ty.m {
        let cexp = cd.c(i, cd.sigma_pow(j, s));
        constant = constant.mul(&Scalar::q_pow(level, cexp));
        // (q^c − ζ^s z) = q^c·(1 − ζ^s q^{−c} z)
        out.mul_factor(&SpectralParam::new(level, s * ze, -2 * cexp, 0), 1);
        out.mul_factor(&SpectralParam::new(level, s * ze, 2 * cexp, 0), -1);
    }
    out.constant = constant;
    Ok(out)
}

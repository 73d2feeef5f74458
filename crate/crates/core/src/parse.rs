//! The expression grammar shared by the CLI and config files:
//!
//! ```text
//! lwexpr := factor { '*' factor }
//! factor := atom [ '^' sint ]
//! atom   := GEN '[' nat ',' param ']'
//!         | 'c' '[' scalar { ',' scalar } ']'
//!         | '(' lwexpr ')'
//! GEN    := 'Y' | 'Yt' | 'P' | 'A'
//! param  := ['-'] patom { '*' patom }          (monomial unit, coeff ±1)
//! scalar := ['-'] patom { '*' patom }          (monomial unit)
//! patom  := 'q' ['^' qexp] | 'z' nat ['^' sint] | 'u' ['^' sint] | rat
//! qexp   := sint | '(' sint '/' '2' ')'
//! rat    := nat ['/' nat]
//! ```
//!
//! The pretty-printers on [`GenMonomial`], [`SpectralParam`] and [`Scalar`]
//! emit this grammar back, and `parse(print(x)) = x` on canonical values.

use num::BigRational;

use crate::cartan::CartanData;
use crate::error::Error;
use crate::lweight::{canonical_param, GenKind, GenMonomial, GenSym};
use crate::scalar::{CycRat, Level, Scalar, SpectralParam};

pub struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn nat(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn sint(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let n = self.nat()?;
        Ok(if neg { -n } else { n })
    }

    /// q-exponent in half-integer units: `3` → 6 halves, `(3/2)` → 3 halves.
    fn qexp_halves(&mut self) -> Result<i64, Error> {
        if self.eat(b'(') {
            let num = self.sint()?;
            self.expect(b'/')?;
            let den = self.nat()?;
            if den != 2 {
                return Err(self.err("only half-integer q-exponents are supported"));
            }
            self.expect(b')')?;
            Ok(num)
        } else {
            Ok(2 * self.sint()?)
        }
    }

    /// One multiplicative token of a parameter/scalar.
    fn patom(&mut self, level: Level) -> Result<Scalar, Error> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                let halves = if self.eat(b'^') { self.qexp_halves()? } else { 2 };
                Ok(Scalar::q_half_pow(level, halves))
            }
            Some(b'z') => {
                self.pos += 1;
                let n = self.nat()?;
                let exp = if self.eat(b'^') { self.sint()? } else { 1 };
                let l = level.order();
                if n == 0 || l % n != 0 {
                    return Err(self.err(format!(
                        "root of unity z{n} is not in the scalar ring (L = {l})"
                    )));
                }
                Ok(Scalar::monomial(
                    level,
                    0,
                    0,
                    CycRat::zeta_pow(level, (l / n) * exp),
                ))
            }
            Some(b'u') => {
                self.pos += 1;
                let exp = if self.eat(b'^') { self.sint()? } else { 1 };
                Ok(Scalar::monomial(level, 0, exp, CycRat::one()))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.nat()?;
                let den = if self.eat(b'/') { self.nat()? } else { 1 };
                if den == 0 {
                    return Err(self.err("zero denominator"));
                }
                Ok(Scalar::from_rational(
                    level,
                    BigRational::new(num.into(), den.into()),
                ))
            }
            _ => Err(self.err("expected q, zN, u or a rational")),
        }
    }

    /// Monomial-unit scalar: `-q^2`, `z3*q^-1`, `u^1*q^2`, `1/2*q^(3/2)`.
    pub fn scalar(&mut self, level: Level) -> Result<Scalar, Error> {
        let neg = self.eat(b'-');
        let mut out = self.patom(level)?;
        loop {
            // a '*' may also separate the enclosing lwexpr's factors; only
            // consume it when the next token starts a patom
            let save = self.pos;
            if !self.eat(b'*') {
                break;
            }
            match self.peek() {
                Some(b'q') | Some(b'z') | Some(b'u') => {}
                Some(c) if c.is_ascii_digit() => {}
                _ => {
                    self.pos = save;
                    break;
                }
            }
            let t = self.patom(level)?;
            out = out.mul(&t);
        }
        if neg {
            out = out.neg();
        }
        if !out.is_monomial() {
            return Err(self.err("scalar is not a monomial unit"));
        }
        Ok(out)
    }

    /// Spectral parameter: a scalar whose coefficient is a root of unity.
    pub fn param(&mut self, level: Level) -> Result<SpectralParam, Error> {
        let start = self.pos;
        let s = self.scalar(level)?;
        let (qh, ue, c) = s.as_monomial().unwrap();
        for k in 0..level.order() {
            if *c == CycRat::zeta_pow(level, k) {
                return Ok(SpectralParam::new(level, k, qh, ue));
            }
        }
        Err(Error::Parse {
            offset: start,
            msg: "spectral parameter must be ±ζ^k·q^e·u^e (coefficient a root of unity)".into(),
        })
    }

    fn gen_kind(&mut self) -> Option<GenKind> {
        match self.peek() {
            Some(b'Y') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b't') {
                    self.pos += 1;
                    Some(GenKind::Ytilde)
                } else {
                    Some(GenKind::Y)
                }
            }
            Some(b'P') => {
                self.pos += 1;
                Some(GenKind::Psi)
            }
            Some(b'A') => {
                self.pos += 1;
                Some(GenKind::A)
            }
            _ => None,
        }
    }

    fn atom(&mut self, cd: &CartanData) -> Result<GenMonomial, Error> {
        if self.eat(b'(') {
            let inner = self.lwexpr(cd)?;
            self.expect(b')')?;
            return Ok(inner);
        }
        if self.peek() == Some(b'c') {
            self.pos += 1;
            self.expect(b'[')?;
            let mut gamma = vec![self.scalar(cd.level)?];
            while self.eat(b',') {
                gamma.push(self.scalar(cd.level)?);
            }
            self.expect(b']')?;
            if gamma.len() != cd.n_i0() {
                return Err(self.err(format!(
                    "constant tuple needs {} entries for {}",
                    cd.n_i0(),
                    cd.ty
                )));
            }
            let mut m = GenMonomial::one(cd);
            m.gamma = gamma;
            return Ok(m);
        }
        let at = self.pos;
        let kind = self
            .gen_kind()
            .ok_or_else(|| self.err("expected Y, Yt, P, A, c[...] or `(`"))?;
        self.expect(b'[')?;
        let node = usize::try_from(self.nat()?).unwrap_or(usize::MAX);
        if cd.i0_index(node).is_err() {
            return Err(Error::Parse {
                offset: at,
                msg: format!("node {node} is outside I0 of {}", cd.ty),
            });
        }
        self.expect(b',')?;
        let param = self.param(cd.level)?;
        self.expect(b']')?;
        let mut m = GenMonomial::one(cd);
        m.mul_gen(
            GenSym {
                kind,
                node,
                param: canonical_param(cd, node, &param),
            },
            1,
        );
        Ok(m)
    }

    fn factor(&mut self, cd: &CartanData) -> Result<GenMonomial, Error> {
        let base = self.atom(cd)?;
        if self.eat(b'^') {
            let e = self.sint()?;
            return Ok(monomial_pow(cd, &base, e));
        }
        Ok(base)
    }

    pub fn lwexpr(&mut self, cd: &CartanData) -> Result<GenMonomial, Error> {
        let mut out = self.factor(cd)?;
        while self.eat(b'*') {
            let f = self.factor(cd)?;
            out = monomial_mul(cd, &out, &f);
        }
        Ok(out)
    }

    pub fn finish(&mut self) -> Result<(), Error> {
        self.skip_ws();
        if self.pos != self.src.len() {
            Err(self.err("trailing input"))
        } else {
            Ok(())
        }
    }
}

fn monomial_pow(cd: &CartanData, m: &GenMonomial, e: i64) -> GenMonomial {
    let mut out = GenMonomial::one(cd);
    for (g, k) in m.gamma.iter().zip(&mut out.gamma) {
        *k = g.pow(e).expect("unit power");
    }
    for (sym, x) in &m.exps {
        out.mul_gen(*sym, x * e);
    }
    out
}

fn monomial_mul(cd: &CartanData, a: &GenMonomial, b: &GenMonomial) -> GenMonomial {
    let mut out = GenMonomial::one(cd);
    for ((x, y), k) in a.gamma.iter().zip(&b.gamma).zip(&mut out.gamma) {
        *k = x.mul(y);
    }
    for (sym, e) in a.exps.iter().chain(b.exps.iter()) {
        out.mul_gen(*sym, *e);
    }
    out
}

/// Parse a generator-monomial expression; parameters are canonicalized per
/// node, so `parse(print(x)) = x` on printer output.
pub fn parse_lweight_expr(src: &str, cd: &CartanData) -> Result<GenMonomial, Error> {
    let mut p = Parser::new(src);
    let m = p.lwexpr(cd)?;
    p.finish()?;
    Ok(m)
}

/// Parse a standalone spectral parameter (CLI `--param`).
pub fn parse_param(src: &str, level: Level) -> Result<SpectralParam, Error> {
    let mut p = Parser::new(src);
    let out = p.param(level)?;
    p.finish()?;
    Ok(out)
}

/// Parse a comma-separated 𝔱*-tuple of monomial-unit scalars.
pub fn parse_weight_tuple(src: &str, cd: &CartanData) -> Result<Vec<Scalar>, Error> {
    let mut p = Parser::new(src);
    let mut out = vec![p.scalar(cd.level)?];
    while p.eat(b',') {
        out.push(p.scalar(cd.level)?);
    }
    p.finish()?;
    if out.len() != cd.n_i0() {
        return Err(Error::Input(format!(
            "weight tuple needs {} entries for {}",
            cd.n_i0(),
            cd.ty
        )));
    }
    Ok(out)
}

/// Parse a comma-separated coweight in the ω^∨ basis.
pub fn parse_coweight(src: &str, cd: &CartanData) -> Result<crate::cartan::Coweight, Error> {
    let parts: Result<Vec<i64>, _> = src.split(',').map(|s| s.trim().parse::<i64>()).collect();
    let coeffs = parts.map_err(|_| Error::Input(format!("bad coweight `{src}`")))?;
    if coeffs.len() != cd.n_i0() {
        return Err(Error::Input(format!(
            "coweight needs {} entries for {}",
            cd.n_i0(),
            cd.ty
        )));
    }
    Ok(crate::cartan::Coweight { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{cartan_data, TwistedType};
    use crate::lweight::lw_eval;

    fn data(tok: &str) -> CartanData {
        cartan_data(TwistedType::from_token(tok).unwrap()).unwrap()
    }

    #[test]
    fn basic_monomial() {
        let cd = data("A2-2");
        let m = parse_lweight_expr("P[1,q^1]^2 * Y[1,q^3]^-1", &cd).unwrap();
        assert_eq!(m.exps.len(), 2);
        let psi = GenSym {
            kind: GenKind::Psi,
            node: 1,
            param: SpectralParam::q_pow(Level::L2, 1),
        };
        let y = GenSym {
            kind: GenKind::Y,
            node: 1,
            param: SpectralParam::q_pow(Level::L2, 3),
        };
        assert_eq!(m.exps[&psi], 2);
        assert_eq!(m.exps[&y], -1);
    }

    #[test]
    fn negated_parameter() {
        let cd = data("A2-2");
        let m = parse_lweight_expr("A[1,-q^2]", &cd).unwrap();
        let (sym, e) = m.exps.iter().next().unwrap();
        assert_eq!(*e, 1);
        assert_eq!(sym.param, SpectralParam::new(Level::L2, 1, 4, 0));
    }

    #[test]
    fn node_range_error() {
        let cd = data("A2-2");
        let err = parse_lweight_expr("Y[7,q^1]", &cd).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }

    #[test]
    fn syntax_error_offset() {
        let cd = data("A2-2");
        match parse_lweight_expr("Y[1 q^1]", &cd) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn zeta_tokens() {
        let cd = data("D4-3");
        let m = parse_lweight_expr("Y[1,z3*q^-1]", &cd).unwrap();
        let sym = m.exps.keys().next().unwrap();
        assert_eq!(sym.param, SpectralParam::new(Level::L6, 2, -2, 0));
        // z3 is rejected in an M = 2 ring
        let a22 = data("A2-2");
        assert!(parse_lweight_expr("Y[1,z3*q^1]", &a22).is_err());
    }

    #[test]
    fn fixed_node_canonicalization() {
        // Y at a fixed node identifies a with ζa: -q² canonicalizes to q²
        let cd = data("A5-2");
        let m1 = parse_lweight_expr("Y[3,-q^2]", &cd).unwrap();
        let m2 = parse_lweight_expr("Y[3,q^2]", &cd).unwrap();
        assert_eq!(m1, m2);
    }

    #[test]
    fn constants_and_parens() {
        let cd = data("A4-2");
        let m = parse_lweight_expr("c[q^1,-q^(3/2)] * (Y[1,q^0]*P[2,q^2])^2", &cd).unwrap();
        assert_eq!(m.gamma[0], Scalar::q_pow(Level::L2, 1));
        assert_eq!(m.gamma[1], Scalar::q_half_pow(Level::L2, 3).neg());
        assert!(m.exps.values().all(|e| *e == 2));
        // half exponents and u-powers parse
        let m = parse_lweight_expr("P[1,q^(3/2)*u^2]", &cd).unwrap();
        let sym = m.exps.keys().next().unwrap();
        assert_eq!(sym.param, SpectralParam::new(Level::L2, 0, 3, 2));
    }

    #[test]
    fn print_parse_round_trip() {
        let cd = data("D4-3");
        let m = parse_lweight_expr("c[z3*q^1,1]*Y[1,z3^2*q^-3]^2*P[2,q^4]^-1*A[1,q^0]", &cd)
            .unwrap();
        let printed = m.to_string();
        let back = parse_lweight_expr(&printed, &cd).unwrap();
        assert_eq!(back, m, "printed form: {printed}");
        // evaluation agrees as well
        assert_eq!(lw_eval(&cd, &back).unwrap(), lw_eval(&cd, &m).unwrap());
    }

    #[test]
    fn empty_monomial_prints_parseable() {
        let cd = data("A2-2");
        let m = GenMonomial::one(&cd);
        let s = m.to_string();
        let back = parse_lweight_expr(&s, &cd).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn standalone_param_tokens() {
        assert_eq!(
            parse_param("u^1*q^2", Level::L2).unwrap(),
            SpectralParam::new(Level::L2, 0, 4, 1)
        );
        assert_eq!(
            parse_param("-q^2", Level::L2).unwrap(),
            SpectralParam::new(Level::L2, 1, 4, 0)
        );
        assert!(parse_param("2*q^1", Level::L2).is_err());
    }

    #[test]
    fn weights_and_coweights() {
        let cd = data("A4-2");
        let w = parse_weight_tuple("q^1,-q^-2", &cd).unwrap();
        assert_eq!(w.len(), 2);
        assert!(parse_weight_tuple("q^1", &cd).is_err());
        let mu = parse_coweight("2,-1", &cd).unwrap();
        assert_eq!(mu.coeffs, vec![2, -1]);
        assert!(parse_coweight("1,2,3", &cd).is_err());
    }
}

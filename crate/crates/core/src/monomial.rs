//! Dense exponent-vector monomials and the three total orders used throughout
//! the crate.
//!
//! Variables are 0-indexed internally: index `0` is `x1`. The 1-based names
//! only appear in the textual form produced by [`Monomial`]'s `Display` impl
//! and accepted by [`crate::expr`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en` stored as its exponent vector.
///
/// The derived `Ord` compares exponent vectors left to right, which is the
/// lexicographic order with `x1 > x2 > ... > xn` for monomials of the same
/// ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` in a ring with `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the variables dividing this monomial, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Largest variable index dividing the monomial.
    pub fn max_var(&self) -> Result<usize> {
        self.exps.iter().rposition(|&e| e > 0).ok_or(Error::UnitMonomial)
    }

    /// Smallest variable index dividing the monomial.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.zip_with(other, |a, b| a - b))
        } else {
            None
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// Divide by `x_{i+1}^k`; `None` if the exponent is smaller than `k`.
    pub fn div_var_pow(&self, i: usize, k: u32) -> Option<Monomial> {
        if self.exps[i] < k {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= k;
        Some(m)
    }

    /// Drop the first `k` variables, relabelling `x_{k+1}..x_n` as `x_1..x_{n-k}`.
    pub(crate) fn drop_leading(&self, k: usize) -> Monomial {
        Monomial::new(self.exps[k..].to_vec())
    }

    /// Inverse of [`Monomial::drop_leading`]: prepend `k` zero exponents.
    pub(crate) fn lift_leading(&self, k: usize) -> Monomial {
        let mut exps = vec![0; k];
        exps.extend_from_slice(&self.exps);
        Monomial::new(exps)
    }

    /// All componentwise operations at once, with the ring check the
    /// unchecked methods only debug-assert.
    pub fn arith(&self, other: &Monomial) -> Result<Arithmetic> {
        same_ring(self, other)?;
        Ok(Arithmetic {
            product: self.mul(other),
            gcd: self.gcd(other),
            lcm: self.lcm(other),
            quotient: self.checked_div(other),
            divides: other.divides(self),
        })
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect() }
    }
}

/// Result of [`Monomial::arith`] for a pair `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arithmetic {
    pub product: Monomial,
    pub gcd: Monomial,
    pub lcm: Monomial,
    /// `a / b` when `b | a`.
    pub quotient: Option<Monomial>,
    /// Whether `b | a`.
    pub divides: bool,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized in the textual form, e.g. `"x1*x3^2"`.
impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The ring `k[x1..xn]` together with the generation degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AmbientContext {
    n: usize,
    d: u32,
}

impl AmbientContext {
    /// Requires `n >= 1` and `d >= 2`.
    pub fn new(n: usize, d: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("need at least one variable".into()));
        }
        if d < 2 {
            return Err(Error::InvalidContext(format!("degree must be at least 2, got {d}")));
        }
        Ok(Self { n, d })
    }

    /// Contexts produced by normalization may have degree 1.
    pub(crate) fn reduced(n: usize, d: u32) -> Self {
        debug_assert!(n >= 1 && d >= 1);
        Self { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Check that `m` lives in this ring and has degree `d`.
    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.n() != self.n {
            return Err(Error::ContextMismatch { left: self.n, right: m.n() });
        }
        if m.degree() != self.d {
            return Err(Error::DegreeMismatch { expected: self.d, found: m.degree() });
        }
        Ok(())
    }
}

fn same_ring(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::ContextMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

/// Lexicographic comparison with `x1 > ... > xn`. Degrees may differ.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    same_ring(a, b)?;
    Ok(lex(a, b))
}

/// The order `≺`: smaller `x1`-exponent first, ties broken by *descending*
/// lex. Only defined on monomials of one degree.
pub fn prec_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    same_ring(a, b)?;
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { expected: a.degree(), found: b.degree() });
    }
    Ok(prec(a, b))
}

/// Lexicographic comparison with the variables reversed, `xn > ... > x1`.
pub fn barlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    same_ring(a, b)?;
    Ok(barlex(a, b))
}

pub(crate) fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.n(), b.n());
    a.exps.cmp(&b.exps)
}

pub(crate) fn prec(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.degree(), b.degree());
    match a.exps.first().cmp(&b.exps.first()) {
        Ordering::Equal => lex(b, a),
        other => other,
    }
}

pub(crate) fn barlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.n(), b.n());
    a.exps.iter().rev().cmp(b.exps.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_examples() {
        // x1x2x3 > x2x3^2
        assert_eq!(lex_cmp(&m(&[1, 1, 1]), &m(&[0, 1, 2])).unwrap(), Ordering::Greater);
        assert_eq!(lex_cmp(&m(&[1, 1, 1]), &m(&[1, 1, 1])).unwrap(), Ordering::Equal);
        // x1^2x3 > x1x2^2
        assert_eq!(lex_cmp(&m(&[2, 0, 1]), &m(&[1, 2, 0])).unwrap(), Ordering::Greater);
        assert!(matches!(lex_cmp(&m(&[1, 0]), &m(&[1, 0, 0])), Err(Error::ContextMismatch { left: 2, right: 3 })));
    }

    #[test]
    fn prec_sorts_example_segment() {
        let mut gens = vec![m(&[1, 1, 1]), m(&[1, 0, 2]), m(&[0, 3, 0]), m(&[0, 2, 1]), m(&[0, 1, 2])];
        gens.sort_by(prec);
        let expected = vec![m(&[0, 3, 0]), m(&[0, 2, 1]), m(&[0, 1, 2]), m(&[1, 1, 1]), m(&[1, 0, 2])];
        assert_eq!(gens, expected);
        // x1x3^2 ≺ x1^2x2
        assert_eq!(prec_cmp(&m(&[1, 0, 2]), &m(&[2, 1, 0])).unwrap(), Ordering::Less);
        assert!(matches!(prec_cmp(&m(&[1, 0, 2]), &m(&[1, 1, 0])), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn barlex_examples() {
        // x1x4^2 vs x1x3x4
        assert_eq!(barlex_cmp(&m(&[1, 0, 0, 2]), &m(&[1, 0, 1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(barlex_cmp(&m(&[1, 0, 2, 0]), &m(&[1, 0, 1, 1])).unwrap(), Ordering::Less);
        assert_eq!(barlex_cmp(&m(&[1, 0, 2, 0]), &m(&[1, 0, 2, 0])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn max_var_examples() {
        assert_eq!(m(&[1, 0, 2, 0]).max_var().unwrap(), 2);
        assert_eq!(m(&[0, 3, 0]).max_var().unwrap(), 1);
        assert_eq!(m(&[1, 1, 1]).max_var().unwrap(), 2);
        assert_eq!(Monomial::one(3).max_var(), Err(Error::UnitMonomial));
    }

    #[test]
    fn arith_examples() {
        let a = m(&[0, 2, 1]);
        let b = m(&[1, 1, 1]);
        let r = a.arith(&b).unwrap();
        assert_eq!(r.gcd, m(&[0, 1, 1]));
        assert_eq!(r.lcm, m(&[1, 2, 1]));
        assert_eq!(r.product, m(&[1, 3, 2]));
        assert_eq!(r.quotient, None);
        assert_eq!(a.checked_div(&r.gcd), Some(m(&[0, 1, 0])));
        assert_eq!(a.lcm(&Monomial::one(3)), a);
        assert_eq!(m(&[1, 0, 2]).checked_div(&m(&[0, 1, 0])), None);
        assert!(a.arith(&m(&[1, 1])).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(m(&[1, 0, 2, 0]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }

    fn mono(n: usize, d: u32) -> impl Strategy<Value = Monomial> {
        // a random weak composition of d into n parts
        proptest::collection::vec(0..=d, n - 1).prop_map(move |mut cuts| {
            cuts.sort_unstable();
            let mut exps = Vec::with_capacity(n);
            let mut prev = 0;
            for c in cuts {
                exps.push(c - prev);
                prev = c;
            }
            exps.push(d - prev);
            Monomial::new(exps)
        })
    }

    fn triple() -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
        (2usize..=6, 1u32..=5).prop_flat_map(|(n, d)| (mono(n, d), mono(n, d), mono(n, d)))
    }

    fn check_total(cmp: fn(&Monomial, &Monomial) -> Ordering, a: &Monomial, b: &Monomial, c: &Monomial) {
        assert_eq!(cmp(a, b), cmp(b, a).reverse());
        assert_eq!(cmp(a, b) == Ordering::Equal, a == b);
        if cmp(a, b) != Ordering::Greater && cmp(b, c) != Ordering::Greater {
            assert_ne!(cmp(a, c), Ordering::Greater);
        }
    }

    proptest! {
        #[test]
        fn orders_are_total((a, b, c) in triple()) {
            check_total(lex, &a, &b, &c);
            check_total(prec, &a, &b, &c);
            check_total(barlex, &a, &b, &c);
        }

        #[test]
        fn prec_refines_reverse_lex((a, b, _c) in triple()) {
            if a.exponent(0) == b.exponent(0) {
                prop_assert_eq!(prec(&a, &b), lex(&b, &a));
            } else {
                prop_assert_eq!(prec(&a, &b), a.exponent(0).cmp(&b.exponent(0)));
            }
        }

        #[test]
        fn gcd_times_lcm_is_product((a, b, _c) in triple()) {
            prop_assert_eq!(a.gcd(&b).mul(&a.lcm(&b)), a.mul(&b));
        }

        #[test]
        fn max_var_of_product((a, b, _c) in triple()) {
            prop_assume!(!a.is_one() && !b.is_one());
            let expected = a.max_var().unwrap().max(b.max_var().unwrap());
            prop_assert_eq!(a.mul(&b).max_var().unwrap(), expected);
        }
    }
}

//! Lexsegments, shadows and the completely-lexsegment test.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{lex, AmbientContext, Monomial};

/// Default number of shadow iterations checked by [`Lexsegment::completeness`].
pub const DEFAULT_SHADOW_DEPTH: u32 = 2;

/// The lex-greatest monomial of the same degree strictly below `m`, or `None`
/// if `m` is `xn^d`.
pub fn lex_next_lower(m: &Monomial) -> Option<Monomial> {
    let n = m.n();
    if n == 0 {
        return None;
    }
    let e = m.exponents();
    let k = e[..n - 1].iter().rposition(|&x| x > 0)?;
    let tail: u32 = e[k + 1..].iter().sum();
    let mut out = e.to_vec();
    out[k] -= 1;
    out[k + 1] = tail + 1;
    for x in &mut out[k + 2..] {
        *x = 0;
    }
    Some(Monomial::new(out))
}

/// The lex-greatest degree-`d` monomial strictly below `v`.
pub fn lex_predecessor(ctx: &AmbientContext, v: &Monomial) -> Result<Option<Monomial>> {
    ctx.check(v)?;
    Ok(lex_next_lower(v))
}

/// Every monomial of degree `d` in `n` variables, lex-descending.
pub fn monomials_of_degree(n: usize, d: u32) -> impl Iterator<Item = Monomial> {
    let mut first = vec![0; n];
    if n > 0 {
        first[0] = d;
    }
    std::iter::successors((n > 0).then(|| Monomial::new(first)), lex_next_lower)
}

/// Walk the closed lex interval from `hi` down to `lo`.
fn walk(hi: &Monomial, lo: &Monomial) -> impl Iterator<Item = Monomial> {
    let lo = lo.clone();
    std::iter::successors(Some(hi.clone()), move |m| if *m == lo { None } else { lex_next_lower(m) })
}

/// `L(u, v)`, the degree-`d` monomials `w` with `u >=lex w >=lex v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexsegment {
    ctx: AmbientContext,
    u: Monomial,
    v: Monomial,
    gens: Vec<Monomial>,
}

impl Lexsegment {
    pub fn new(ctx: AmbientContext, u: Monomial, v: Monomial) -> Result<Self> {
        ctx.check(&u).map_err(|e| Error::InvalidSegment(format!("u = {u}: {e}")))?;
        ctx.check(&v).map_err(|e| Error::InvalidSegment(format!("v = {v}: {e}")))?;
        if lex(&u, &v) == Ordering::Less {
            return Err(Error::InvalidSegment(format!("u = {u} is lex-smaller than v = {v}")));
        }
        let gens = walk(&u, &v).collect();
        Ok(Self { ctx, u, v, gens })
    }

    /// The initial segment `L(x1^d, v)`.
    pub fn initial(ctx: AmbientContext, v: Monomial) -> Result<Self> {
        let mut top = vec![0; ctx.n()];
        top[0] = ctx.d();
        Self::new(ctx, Monomial::new(top), v)
    }

    /// The final segment `L(u, xn^d)`.
    pub fn final_segment(ctx: AmbientContext, u: Monomial) -> Result<Self> {
        let mut bottom = vec![0; ctx.n()];
        bottom[ctx.n() - 1] = ctx.d();
        Self::new(ctx, u, Monomial::new(bottom))
    }

    pub fn ctx(&self) -> &AmbientContext {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn d(&self) -> u32 {
        self.ctx.d()
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    /// The generators, lex-descending (`u` first, `v` last).
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        w.n() == self.n()
            && w.degree() == self.d()
            && lex(&self.u, w) != Ordering::Less
            && lex(w, &self.v) != Ordering::Less
    }

    pub fn is_principal(&self) -> bool {
        self.u == self.v
    }

    /// Whether the segment is all of `M_d`, i.e. the ideal is `m^d`.
    pub fn is_maximal_power(&self) -> bool {
        let d = self.d();
        self.u.exponent(0) == d && self.v.exponent(self.n() - 1) == d
    }

    /// Check iterated shadows through degree `d + max_extra_degrees`.
    pub fn completeness(&self, max_extra_degrees: u32) -> Completeness {
        let mut current: BTreeSet<Monomial> = self.gens.iter().cloned().collect();
        for k in 1..=max_extra_degrees {
            current = shadow_unchecked(&current);
            if !is_interval(&current) {
                return Completeness {
                    complete: false,
                    checked_through: self.d() + k,
                    first_failure: Some(self.d() + k),
                };
            }
        }
        Completeness { complete: true, checked_through: self.d() + max_extra_degrees, first_failure: None }
    }

    pub fn is_completely_lexsegment(&self) -> bool {
        self.completeness(DEFAULT_SHADOW_DEPTH).complete
    }
}

/// Outcome of the bounded completely-lexsegment check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Completeness {
    pub complete: bool,
    /// Highest shadow degree examined.
    pub checked_through: u32,
    /// Degree of the first shadow that is not a lexsegment.
    pub first_failure: Option<u32>,
}

/// `shad(T) = { x_i * t : t in T }`.
pub fn shadow(t: &BTreeSet<Monomial>) -> Result<BTreeSet<Monomial>> {
    check_uniform(t)?;
    Ok(shadow_unchecked(t))
}

fn shadow_unchecked(t: &BTreeSet<Monomial>) -> BTreeSet<Monomial> {
    t.iter().flat_map(|m| (0..m.n()).map(move |i| m.mul_var(i))).collect()
}

fn check_uniform(t: &BTreeSet<Monomial>) -> Result<()> {
    let mut it = t.iter();
    if let Some(first) = it.next() {
        for m in it {
            if m.n() != first.n() {
                return Err(Error::ContextMismatch { left: first.n(), right: m.n() });
            }
            if m.degree() != first.degree() {
                return Err(Error::MixedDegrees);
            }
        }
    }
    Ok(())
}

/// Whether `T = L(max T, min T)`.
pub fn is_lexsegment_set(t: &BTreeSet<Monomial>) -> Result<bool> {
    if t.is_empty() {
        return Err(Error::EmptySet);
    }
    check_uniform(t)?;
    Ok(is_interval(t))
}

fn is_interval(t: &BTreeSet<Monomial>) -> bool {
    // BTreeSet order is lex, so first/last are the lex extremes.
    let (Some(lo), Some(hi)) = (t.first(), t.last()) else {
        return true;
    };
    let mut count = 0;
    for m in walk(hi, lo) {
        if !t.contains(&m) {
            return false;
        }
        count += 1;
    }
    count == t.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn seg(n: usize, d: u32, u: &[u32], v: &[u32]) -> Lexsegment {
        Lexsegment::new(AmbientContext::new(n, d).unwrap(), m(u), m(v)).unwrap()
    }

    #[test]
    fn enumerate_example_segment() {
        let s = seg(3, 3, &[1, 1, 1], &[0, 1, 2]);
        let expected = vec![m(&[1, 1, 1]), m(&[1, 0, 2]), m(&[0, 3, 0]), m(&[0, 2, 1]), m(&[0, 1, 2])];
        assert_eq!(s.generators(), expected.as_slice());
    }

    #[test]
    fn enumerate_singleton_and_six_element_segment() {
        let s = seg(3, 3, &[1, 1, 1], &[1, 1, 1]);
        assert_eq!(s.generators(), &[m(&[1, 1, 1])]);
        let s = seg(3, 3, &[2, 1, 0], &[0, 3, 0]);
        assert_eq!(s.generators().len(), 6);
        assert!(s.generators().contains(&m(&[2, 0, 1])));
    }

    #[test]
    fn rejects_bad_ends() {
        let ctx = AmbientContext::new(3, 3).unwrap();
        assert!(matches!(Lexsegment::new(ctx, m(&[0, 1, 2]), m(&[1, 1, 1])), Err(Error::InvalidSegment(_))));
        assert!(matches!(Lexsegment::new(ctx, m(&[1, 1, 0]), m(&[0, 1, 1])), Err(Error::InvalidSegment(_))));
    }

    #[test]
    fn predecessor_examples() {
        let ctx = AmbientContext::new(3, 3).unwrap();
        assert_eq!(lex_predecessor(&ctx, &m(&[0, 1, 2])).unwrap(), Some(m(&[0, 0, 3])));
        assert_eq!(lex_predecessor(&ctx, &m(&[0, 0, 3])).unwrap(), None);
        assert_eq!(lex_predecessor(&ctx, &m(&[0, 3, 0])).unwrap(), Some(m(&[0, 2, 1])));
    }

    #[test]
    fn all_monomials_counts() {
        // C(n+d-1, d)
        assert_eq!(monomials_of_degree(3, 3).count(), 10);
        assert_eq!(monomials_of_degree(5, 4).count(), 70);
        assert_eq!(monomials_of_degree(1, 4).count(), 1);
        let all: Vec<_> = monomials_of_degree(4, 3).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn shadow_examples() {
        let t: BTreeSet<_> = [m(&[0, 2])].into_iter().collect();
        let expected: BTreeSet<_> = [m(&[1, 2]), m(&[0, 3])].into_iter().collect();
        assert_eq!(shadow(&t).unwrap(), expected);
        assert!(shadow(&BTreeSet::new()).unwrap().is_empty());

        let l: BTreeSet<_> = seg(3, 2, &[2, 0, 0], &[0, 1, 1]).generators().iter().cloned().collect();
        let sh = shadow(&l).unwrap();
        let expected: BTreeSet<_> = seg(3, 3, &[3, 0, 0], &[0, 1, 2]).generators().iter().cloned().collect();
        assert_eq!(sh.len(), 9);
        assert_eq!(sh, expected);

        let mixed: BTreeSet<_> = [m(&[1, 0]), m(&[1, 1])].into_iter().collect();
        assert_eq!(shadow(&mixed), Err(Error::MixedDegrees));
    }

    #[test]
    fn lexsegment_set_examples() {
        let t: BTreeSet<_> = [m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 2, 0])].into_iter().collect();
        assert!(is_lexsegment_set(&t).unwrap());
        let t: BTreeSet<_> = [m(&[2, 0, 0]), m(&[0, 2, 0])].into_iter().collect();
        assert!(!is_lexsegment_set(&t).unwrap());
        let t: BTreeSet<_> = [m(&[0, 1, 1])].into_iter().collect();
        assert!(is_lexsegment_set(&t).unwrap());
        assert_eq!(is_lexsegment_set(&BTreeSet::new()), Err(Error::EmptySet));
    }

    #[test]
    fn completeness_examples() {
        assert!(seg(3, 3, &[1, 1, 1], &[0, 1, 2]).is_completely_lexsegment());
        let c = seg(6, 4, &[1, 0, 2, 0, 1, 0], &[0, 1, 0, 0, 0, 3]).completeness(2);
        assert!(!c.complete);
        assert_eq!(c.first_failure, Some(5));
        for v in monomials_of_degree(4, 3) {
            let s = Lexsegment::initial(AmbientContext::new(4, 3).unwrap(), v).unwrap();
            assert!(s.is_completely_lexsegment());
        }
    }

    #[test]
    fn maximal_power_and_principal_flags() {
        assert!(seg(3, 2, &[2, 0, 0], &[0, 0, 2]).is_maximal_power());
        assert!(!seg(3, 2, &[1, 1, 0], &[0, 0, 2]).is_maximal_power());
        assert!(seg(3, 2, &[1, 1, 0], &[1, 1, 0]).is_principal());
    }
}

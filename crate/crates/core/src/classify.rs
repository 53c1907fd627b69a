//! Closed-form invariants of `S/I` for a lexsegment ideal `I = (L(u, v))`.
//!
//! Everything here is case analysis on the two ends of the segment. No
//! resolution or homology is ever computed; [`crate::oracle`] does that
//! independently and the sweep compares the two.

use std::cmp::Ordering;

use serde::Serialize;

use crate::monomial::{lex, AmbientContext, Monomial};
use crate::segment::{lex_next_lower, Lexsegment, DEFAULT_SHADOW_DEPTH};

/// `L(u, v)` rewritten so that `x1` divides `u` but not `v`.
///
/// The reduction divides both ends by the common power of `x1` and, when
/// neither end involves `x1` any more, drops `x1` and repeats in the
/// remaining variables. Over the original ring
/// `I = factor * (extension of the reduced ideal)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub segment: Lexsegment,
    /// Monomial of the original ring divided out of every generator.
    pub factor: Monomial,
    pub dropped_leading_vars: usize,
    pub principal: bool,
    pub maximal_power: bool,
}

impl NormalForm {
    pub fn divided_power(&self) -> u32 {
        self.factor.degree()
    }

    /// Map a monomial of the reduced ring back to the original ring.
    pub fn lift(&self, w: &Monomial) -> Monomial {
        w.lift_leading(self.dropped_leading_vars).mul(&self.factor)
    }
}

pub fn normalize(seg: &Lexsegment) -> NormalForm {
    let n = seg.n();
    let mut factor = Monomial::one(n);
    if seg.is_principal() || seg.is_maximal_power() {
        return NormalForm {
            segment: seg.clone(),
            factor,
            dropped_leading_vars: 0,
            principal: seg.is_principal(),
            maximal_power: seg.is_maximal_power(),
        };
    }
    let (mut u, mut v) = (seg.u().clone(), seg.v().clone());
    let mut dropped = 0;
    loop {
        let b1 = v.exponent(0);
        for _ in 0..b1 {
            factor = factor.mul_var(dropped);
        }
        u = u.div_var_pow(0, b1).expect("u >=lex v bounds the x1 exponent");
        v = v.div_var_pow(0, b1).expect("b1 divides v");
        if u.exponent(0) > 0 {
            break;
        }
        // u != v, so at least two variables remain here.
        u = u.drop_leading(1);
        v = v.drop_leading(1);
        dropped += 1;
    }
    let ctx = AmbientContext::reduced(u.n(), u.degree());
    let segment = Lexsegment::new(ctx, u, v).expect("normalization preserves the lex interval");
    NormalForm { segment, factor, dropped_leading_vars: dropped, principal: false, maximal_power: false }
}

/// Which clause decided linearity of the resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinearCase {
    Principal,
    /// `u = x1^a x2^(d-a)`, `v = x1^a xn^(d-a)`.
    A,
    /// `b1 < a1 - 1`.
    B,
    /// `b1 = a1 - 1` and the predecessor condition.
    C,
    /// Not completely lexsegment, `u = x1 x_{l+1}^.. xn^..`, `v = x_l xn^(d-1)`.
    NonComplete,
    /// Completely lexsegment, none of (a), (b), (c).
    CompleteNone,
    /// Not completely lexsegment and not of the non-complete shape.
    NonCompleteNone,
}

impl LinearCase {
    pub fn is_linear(self) -> bool {
        matches!(self, Self::Principal | Self::A | Self::B | Self::C | Self::NonComplete)
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Principal => "principal",
            Self::A => "a",
            Self::B => "b",
            Self::C => "c",
            Self::NonComplete => "non-complete",
            Self::CompleteNone => "complete-none",
            Self::NonCompleteNone => "non-complete-none",
        }
    }
}

/// The criterion for completely lexsegment ideals, applied to the ends as
/// given. Returns the first of (a), (b), (c) that holds.
pub fn complete_criterion(seg: &Lexsegment) -> Option<LinearCase> {
    let (u, v, n, d) = (seg.u(), seg.v(), seg.n(), seg.d());
    let (a1, b1) = (u.exponent(0), v.exponent(0));
    if a1 == b1 && a1 > 0 {
        let a = a1;
        let u_ok = n >= 2 && u.exponent(1) == d - a;
        let v_ok = v.exponent(n - 1) == d - a;
        if u_ok && v_ok {
            return Some(LinearCase::A);
        }
    }
    if b1 + 1 < a1 {
        return Some(LinearCase::B);
    }
    if b1 + 1 == a1 {
        let ok = match lex_next_lower(v) {
            None => true,
            Some(z) => {
                let top = z.max_var().expect("degree >= 1");
                let w = z.div_var(top).expect("max var divides").mul_var(0);
                lex(&w, u) != Ordering::Greater
            }
        };
        if ok {
            return Some(LinearCase::C);
        }
    }
    None
}

/// For a normalized segment (`x1 | u`, `x1 ∤ v`): the `l` with
/// `u = x1 x_{l+1}^.. xn^..` and `v = x_l xn^(d-1)`, 0-based.
pub fn non_complete_shape(seg: &Lexsegment) -> Option<usize> {
    let (u, v, n, d) = (seg.u(), seg.v(), seg.n(), seg.d());
    if u.exponent(0) != 1 || v.exponent(0) != 0 || n < 2 {
        return None;
    }
    let last = n - 1;
    let l = if v.exponent(last) == d {
        last
    } else if v.exponent(last) == d - 1 {
        v.min_var()?
    } else {
        return None;
    };
    if l == 0 {
        return None;
    }
    if (1..=l).all(|i| u.exponent(i) == 0) {
        Some(l)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearResolution {
    pub linear: bool,
    pub case: LinearCase,
    /// Completeness of the normalized segment used for the decision.
    pub complete: bool,
}

pub fn has_linear_resolution(seg: &Lexsegment) -> LinearResolution {
    let nf = normalize(seg);
    if nf.principal {
        return LinearResolution { linear: true, case: LinearCase::Principal, complete: true };
    }
    // Clause (a) normalizes to a power of the maximal ideal of fewer
    // variables; report it under its own name.
    if complete_criterion(seg) == Some(LinearCase::A) {
        return LinearResolution { linear: true, case: LinearCase::A, complete: true };
    }
    let r = &nf.segment;
    let complete = r.completeness(DEFAULT_SHADOW_DEPTH).complete;
    let case = if complete {
        complete_criterion(r).unwrap_or(LinearCase::CompleteNone)
    } else if non_complete_shape(r).is_some() {
        LinearCase::NonComplete
    } else {
        LinearCase::NonCompleteNone
    };
    LinearResolution { linear: case.is_linear(), case, complete }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Invariant {
    pub value: usize,
    pub case: &'static str,
}

/// `dim S/I`.
pub fn krull_dimension(seg: &Lexsegment) -> Invariant {
    let n = seg.n();
    if seg.is_maximal_power() {
        return Invariant { value: 0, case: "maximal-power" };
    }
    if seg.is_principal() {
        return Invariant { value: n - 1, case: "principal" };
    }
    if seg.u().exponent(0) == 0 {
        // Neither end involves x1: the ideal is extended from k[x2..xn].
        let ctx = AmbientContext::reduced(n - 1, seg.d());
        let inner = Lexsegment::new(ctx, seg.u().drop_leading(1), seg.v().drop_leading(1))
            .expect("dropping an unused variable keeps the interval");
        let d = krull_dimension(&inner);
        return Invariant { value: d.value + 1, case: d.case };
    }
    let q = seg.v().min_var().expect("v has positive degree") + 1;
    if q == n {
        Invariant { value: 1, case: "q=n" }
    } else {
        Invariant { value: n - q, case: "q<n" }
    }
}

/// `x_n u / x_1 >=lex v` on a normalized segment.
fn reduced_depth_zero(r: &Lexsegment) -> bool {
    let n = r.n();
    let w = r.u().div_var(0).expect("normalized: x1 | u").mul_var(n - 1);
    lex(&w, r.v()) != Ordering::Less
}

pub fn depth_is_zero(seg: &Lexsegment) -> bool {
    let nf = normalize(seg);
    if nf.maximal_power {
        return true;
    }
    if nf.principal {
        return seg.n() == 1;
    }
    nf.dropped_leading_vars == 0 && reduced_depth_zero(&nf.segment)
}

/// `depth S/I`.
pub fn depth(seg: &Lexsegment) -> Invariant {
    let nf = normalize(seg);
    if nf.maximal_power {
        return Invariant { value: 0, case: "maximal-power" };
    }
    if nf.principal {
        return Invariant { value: seg.n() - 1, case: "principal" };
    }
    let inner = reduced_depth(&nf.segment);
    Invariant { value: inner.value + nf.dropped_leading_vars, case: inner.case }
}

fn reduced_depth(r: &Lexsegment) -> Invariant {
    let (n, d) = (r.n(), r.d());
    if reduced_depth_zero(r) {
        return Invariant { value: 0, case: "zero" };
    }
    if d == 1 {
        // (x1, ..., x_q) with q < n
        let q = r.v().min_var().expect("degree 1") + 1;
        return Invariant { value: n - q, case: "variables" };
    }
    // Positive depth forces u = x1 * x_l^.. with l >= 2 (1-based below).
    let l = r.u().support().nth(1).expect("degree >= 2 and a1 = 1") + 1;
    let v = r.v();
    if n >= 2 && v.exponent(1) == d {
        if l >= 4 {
            return Invariant { value: l - 2, case: "a" };
        }
    } else if n >= 2 && v.exponent(1) == d - 1 {
        let j = v.max_var().expect("degree >= 2") + 1;
        if (3..=n.saturating_sub(2)).contains(&j) && l >= j + 2 {
            return Invariant { value: l - j, case: "b" };
        }
    }
    Invariant { value: 1, case: "c" }
}

/// `projdim S/I = n - depth S/I`, labelled with the matching closed form.
pub fn proj_dimension(seg: &Lexsegment) -> Invariant {
    let dp = depth(seg);
    let case = match dp.case {
        "zero" | "maximal-power" => "n",
        "a" => "n-l+2",
        "b" => "n-l+j",
        "c" => "n-1",
        other => other,
    };
    Invariant { value: seg.n() - dp.value, case }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CohenMacaulay {
    pub cohen_macaulay: bool,
    /// `a`/`b` when a clause of the characterization matches, `none` when the
    /// characterization applies but no clause matches, otherwise the reason it
    /// does not apply.
    pub case: &'static str,
}

pub fn is_cohen_macaulay(seg: &Lexsegment) -> CohenMacaulay {
    let dim = krull_dimension(seg).value;
    let dp = depth(seg).value;
    let cohen_macaulay = dim == dp;
    let case = if seg.is_maximal_power() {
        "maximal-power"
    } else if seg.is_principal() {
        "principal"
    } else {
        characterization_clause(seg, dim).unwrap_or("depth-vs-dim")
    };
    CohenMacaulay { cohen_macaulay, case }
}

/// The Cohen–Macaulay characterization for `n >= 3`, `a1 > b1` and
/// `dim S/I >= 1`; `None` outside those hypotheses.
pub fn characterization_clause(seg: &Lexsegment, dim: usize) -> Option<&'static str> {
    let (u, v, n, d) = (seg.u(), seg.v(), seg.n(), seg.d());
    if n < 3 || u.exponent(0) <= v.exponent(0) || dim == 0 {
        return None;
    }
    let mut x1_xn = Monomial::one(n).mul_var(0);
    for _ in 1..d {
        x1_xn = x1_xn.mul_var(n - 1);
    }
    let x2_d = {
        let mut e = vec![0; n];
        e[1] = d;
        Monomial::new(e)
    };
    if *u == x1_xn && *v == x2_d {
        return Some("a");
    }
    let tail_only = v.exponent(n - 2) > 0 && v.exponent(n - 2) + v.exponent(n - 1) == d;
    if tail_only {
        let w = u.div_var(0).expect("a1 > 0").mul_var(n - 1);
        if lex(&w, v) == Ordering::Less {
            return Some("b");
        }
    }
    Some("none")
}

/// Every closed-form answer for one segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub completely: bool,
    pub linear: LinearResolution,
    pub dim: Invariant,
    pub depth: Invariant,
    pub projdim: Invariant,
    pub cohen_macaulay: CohenMacaulay,
}

pub fn classify(seg: &Lexsegment) -> Classification {
    Classification {
        completely: seg.is_completely_lexsegment(),
        linear: has_linear_resolution(seg),
        dim: krull_dimension(seg),
        depth: depth(seg),
        projdim: proj_dimension(seg),
        cohen_macaulay: is_cohen_macaulay(seg),
    }
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
    fn normalize_divides_common_power() {
        let nf = normalize(&seg(3, 3, &[2, 1, 0], &[1, 0, 2]));
        assert_eq!(nf.segment.u(), &m(&[1, 1, 0]));
        assert_eq!(nf.segment.v(), &m(&[0, 0, 2]));
        assert_eq!(nf.segment.d(), 2);
        assert_eq!(nf.dropped_leading_vars, 0);
        assert_eq!(nf.divided_power(), 1);
    }

    #[test]
    fn normalize_drops_variables() {
        let nf = normalize(&seg(3, 3, &[2, 1, 0], &[2, 0, 1]));
        assert_eq!(nf.segment.u(), &m(&[1, 0]));
        assert_eq!(nf.segment.v(), &m(&[0, 1]));
        assert_eq!((nf.segment.n(), nf.segment.d()), (2, 1));
        assert_eq!(nf.dropped_leading_vars, 1);
        assert_eq!(nf.lift(&m(&[1, 0])), m(&[2, 1, 0]));
    }

    #[test]
    fn normalize_flags() {
        assert!(normalize(&seg(3, 2, &[2, 0, 0], &[0, 0, 2])).maximal_power);
        assert!(normalize(&seg(3, 2, &[0, 1, 1], &[0, 1, 1])).principal);
    }

    #[test]
    fn linear_resolution_examples() {
        let r = has_linear_resolution(&seg(3, 3, &[1, 1, 1], &[0, 1, 2]));
        assert!(r.linear);
        assert_eq!(r.case, LinearCase::C);

        let r = has_linear_resolution(&seg(6, 4, &[1, 0, 2, 0, 1, 0], &[0, 1, 0, 0, 0, 3]));
        assert!(r.linear);
        assert_eq!(r.case, LinearCase::NonComplete);
        assert!(!r.complete);

        let r = has_linear_resolution(&seg(3, 2, &[2, 0, 0], &[0, 1, 1]));
        assert_eq!(r.case, LinearCase::B);
    }

    #[test]
    fn criterion_a_on_unnormalized_ends() {
        // u = x1 x2^2, v = x1 x4^2
        assert_eq!(complete_criterion(&seg(4, 3, &[1, 2, 0, 0], &[1, 0, 0, 2])), Some(LinearCase::A));
        assert_eq!(has_linear_resolution(&seg(4, 3, &[1, 2, 0, 0], &[1, 0, 0, 2])).case, LinearCase::A);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(krull_dimension(&seg(3, 2, &[1, 1, 0], &[0, 0, 2])).value, 1);
        assert_eq!(krull_dimension(&seg(4, 3, &[1, 2, 0, 0], &[0, 0, 2, 1])).value, 1);
        assert_eq!(krull_dimension(&seg(3, 2, &[2, 0, 0], &[0, 0, 2])).value, 0);
        assert_eq!(krull_dimension(&seg(3, 2, &[0, 1, 1], &[0, 1, 1])).value, 2);
    }

    #[test]
    fn depth_zero_examples() {
        // final segment
        assert!(depth_is_zero(&seg(4, 3, &[1, 1, 1, 0], &[0, 0, 0, 3])));
        // initial segment ending at x1^(d-1) xn
        assert!(depth_is_zero(&seg(4, 3, &[3, 0, 0, 0], &[2, 0, 0, 1])));
        assert!(!depth_is_zero(&seg(4, 3, &[3, 0, 0, 0], &[2, 0, 1, 0])));
        // x4^2 x5 <lex x2^2 x3
        assert!(!depth_is_zero(&seg(5, 3, &[1, 0, 0, 2, 0], &[0, 2, 1, 0, 0])));
    }

    #[test]
    fn depth_examples() {
        let dp = depth(&seg(6, 4, &[1, 0, 0, 1, 1, 1], &[0, 4, 0, 0, 0, 0]));
        assert_eq!((dp.value, dp.case), (2, "a"));
        let dp = depth(&seg(5, 3, &[1, 0, 0, 0, 2], &[0, 2, 1, 0, 0]));
        assert_eq!((dp.value, dp.case), (2, "b"));
        let dp = depth(&seg(4, 3, &[1, 0, 2, 0], &[0, 1, 0, 2]));
        assert_eq!((dp.value, dp.case), (1, "c"));
    }

    #[test]
    fn projdim_examples() {
        let p = proj_dimension(&seg(4, 3, &[1, 1, 1, 0], &[0, 0, 0, 3]));
        assert_eq!((p.value, p.case), (4, "n"));
        let p = proj_dimension(&seg(6, 4, &[1, 0, 0, 1, 1, 1], &[0, 4, 0, 0, 0, 0]));
        assert_eq!((p.value, p.case), (4, "n-l+2"));
        assert_eq!(proj_dimension(&seg(3, 2, &[0, 1, 1], &[0, 1, 1])).value, 1);
    }

    #[test]
    fn cohen_macaulay_examples() {
        let s = seg(4, 2, &[1, 0, 0, 1], &[0, 2, 0, 0]);
        let cm = is_cohen_macaulay(&s);
        assert_eq!((cm.cohen_macaulay, cm.case), (true, "a"));
        assert_eq!(krull_dimension(&s).value, 2);
        assert_eq!(depth(&s).value, 2);

        let s = seg(4, 3, &[1, 0, 1, 1], &[0, 0, 2, 1]);
        let cm = is_cohen_macaulay(&s);
        assert_eq!((cm.cohen_macaulay, cm.case), (true, "b"));
        assert_eq!((krull_dimension(&s).value, depth(&s).value), (1, 1));

        // x4 u / x1 = x3^2 x4 >=lex v, so depth 0 although q = n - 1
        let s = seg(4, 3, &[1, 0, 2, 0], &[0, 0, 1, 2]);
        assert_eq!((krull_dimension(&s).value, depth(&s).value), (1, 0));
        assert!(!is_cohen_macaulay(&s).cohen_macaulay);

        let s = seg(4, 3, &[1, 2, 0, 0], &[0, 0, 3, 0]);
        assert_eq!(krull_dimension(&s).value, 1);
        assert_eq!(depth(&s).value, 0);
        assert!(!is_cohen_macaulay(&s).cohen_macaulay);
    }
}

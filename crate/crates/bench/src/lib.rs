//! Shared inputs for the benchmarks.

use lexseg::segment::monomials_of_degree;
use lexseg::{AmbientContext, Lexsegment, Monomial};

/// `L(u, v)` from exponent vectors; panics on invalid input.
pub fn segment(u: &[u32], v: &[u32]) -> Lexsegment {
    let ctx = AmbientContext::new(u.len(), u.iter().sum()).expect("valid context");
    Lexsegment::new(ctx, Monomial::new(u.to_vec()), Monomial::new(v.to_vec())).expect("valid segment")
}

/// A handful of segments of growing size, labelled for benchmark ids.
pub fn ladder() -> Vec<(&'static str, Lexsegment)> {
    vec![
        ("n3d3", segment(&[1, 1, 1], &[0, 1, 2])),
        ("n4d3", segment(&[2, 1, 0, 0], &[0, 1, 1, 1])),
        ("n5d3", segment(&[2, 0, 1, 0, 0], &[0, 2, 0, 0, 1])),
        ("n5d4", segment(&[3, 1, 0, 0, 0], &[0, 3, 0, 0, 1])),
    ]
}

/// Every lexsegment in `n` variables and degree `d`.
pub fn all_segments(n: usize, d: u32) -> Vec<Lexsegment> {
    let ctx = AmbientContext::new(n, d).expect("valid context");
    let mons: Vec<Monomial> = monomials_of_degree(n, d).collect();
    let mut out = Vec::new();
    for (i, u) in mons.iter().enumerate() {
        for v in &mons[i..] {
            out.push(Lexsegment::new(ctx, u.clone(), v.clone()).expect("u >=lex v"));
        }
    }
    out
}

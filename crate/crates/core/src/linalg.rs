//! Exact rank over the rationals for small integer matrices.

use std::collections::HashMap;

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over `Q` of a dense integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<Vec<(usize, i64)>> =
        rows.iter().map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(c, &x)| (c, x)).collect()).collect();
    sparse_rank(&sparse)
}

/// Rank over `Q` of a sparse integer matrix; each row lists `(column, value)`
/// pairs with distinct columns.
///
/// Rows are reduced one at a time against the echelon rows found so far,
/// keyed by leading column. Elimination is fraction-free and every row is
/// divided by the gcd of its entries after each step, which keeps entries
/// small for the ±1 incidence matrices this crate produces. Overflow panics
/// rather than wrapping.
pub fn sparse_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, i128)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(usize, i128)> = row.iter().filter(|e| e.1 != 0).map(|&(c, x)| (c, x as i128)).collect();
        r.sort_unstable_by_key(|e| e.0);
        while let Some(&(lead, a)) = r.first() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, r);
                break;
            };
            r = combine(&r, a, p, p[0].1);
        }
    }
    pivots.len()
}

/// `b * r - a * p`, both sorted by column, divided by the gcd of the result.
fn combine(r: &[(usize, i128)], a: i128, p: &[(usize, i128)], b: i128) -> Vec<(usize, i128)> {
    let mul = |x: i128, y: i128| x.checked_mul(y).expect("integer overflow in exact elimination");
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (c, x) = match (r.get(i), p.get(j)) {
            (Some(&(cr, xr)), Some(&(cp, xp))) if cr == cp => {
                i += 1;
                j += 1;
                (cr, mul(b, xr).checked_sub(mul(a, xp)).expect("integer overflow in exact elimination"))
            }
            (Some(&(cr, xr)), Some(&(cp, _))) if cr < cp => {
                i += 1;
                (cr, mul(b, xr))
            }
            (Some(&(cr, xr)), None) => {
                i += 1;
                (cr, mul(b, xr))
            }
            (_, Some(&(cp, xp))) => {
                j += 1;
                (cp, -mul(a, xp))
            }
            (None, None) => unreachable!(),
        };
        if x != 0 {
            out.push((c, x));
        }
    }
    let g = out.iter().fold(0, |g, e| gcd(g, e.1));
    if g > 1 {
        out.iter_mut().for_each(|e| e.1 /= g);
    }
    out
}

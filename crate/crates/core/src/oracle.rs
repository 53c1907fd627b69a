//! Brute-force ground truth for monomial ideals.
//!
//! Nothing in here looks at lexsegment structure or calls the closed-form
//! modules; all answers come from homology, vertex covers and
//! inclusion–exclusion directly on the generators.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::monomial::Monomial;
use crate::poly::IntPoly;

/// Default cap on generators for the subset-based routes (Taylor complex and
/// subset inclusion–exclusion), which visit all `2^m` subsets.
pub const DEFAULT_CAP: usize = 22;

/// [`betti_table`] uses the Taylor complex up to this many generators and
/// the Koszul-simplicial route beyond it.
pub const TAYLOR_AUTO_LIMIT: usize = 10;

/// Graded Betti numbers `β_{i,j}` of `S/I`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub value: usize,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: u32, value: usize) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, v)| v).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|(&(i, j), &value)| BettiEntry { i, j, value })
    }

    /// Largest `i` with `β_i != 0`.
    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `β_{i,j} != 0` only for `j = d + i - 1` when `i >= 1`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.entries.keys().all(|&(i, j)| i == 0 || j as usize == d as usize + i - 1)
    }

    /// `Σ_i (-1)^i β_{i,j} t^j`.
    pub fn euler_polynomial(&self) -> IntPoly {
        let mut p = IntPoly::zero();
        for (&(i, j), &v) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            p.add_term(j as usize, sign * v as i64);
        }
        p
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries())
    }
}

/// Exponent vectors packed one byte per variable.
type Packed = u128;

fn pack(m: &Monomial) -> Packed {
    m.exponents().iter().enumerate().fold(0, |acc, (i, &e)| acc | (Packed::from(e as u8) << (8 * i)))
}

fn packed_lcm(a: Packed, b: Packed, n: usize) -> Packed {
    (0..n).fold(0, |acc, i| {
        let x = (a >> (8 * i)) & 0xff;
        let y = (b >> (8 * i)) & 0xff;
        acc | (x.max(y) << (8 * i))
    })
}

fn packed_degree(a: Packed, n: usize) -> u32 {
    (0..n).map(|i| ((a >> (8 * i)) & 0xff) as u32).sum()
}

fn check_packable(gens: &[Monomial], n: usize) -> Result<()> {
    if n > 16 {
        return Err(Error::Unsupported(format!("oracle supports at most 16 variables, got {n}")));
    }
    for g in gens {
        if g.n() != n {
            return Err(Error::ContextMismatch { left: n, right: g.n() });
        }
        if g.exponents().iter().any(|&e| e > 255) {
            return Err(Error::Unsupported(format!("exponent too large in {g}")));
        }
    }
    Ok(())
}

/// Drop duplicates and non-minimal generators.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, h)| j != k && h.divides(g) && (h != g || j < k));
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

/// Betti numbers of `S/I` from the Taylor complex, one multidegree at a time.
///
/// In multidegree `b` the complex `T ⊗ k` keeps the subsets whose lcm is
/// exactly `b`, with incidence `±1` between `σ` and `σ \ {j}` whenever
/// removing `j` does not lower the lcm.
pub fn taylor_betti(gens: &[Monomial], n: usize, cap: usize) -> Result<BettiTable> {
    check_packable(gens, n)?;
    let gens = minimalize(gens);
    let m = gens.len();
    if m > cap {
        return Err(Error::CapacityExceeded { count: m, cap });
    }
    let packed: Vec<Packed> = gens.iter().map(pack).collect();
    let mut lcm = vec![0 as Packed; 1 << m];
    for mask in 1usize..(1 << m) {
        let low = mask.trailing_zeros() as usize;
        lcm[mask] = packed_lcm(lcm[mask & (mask - 1)], packed[low], n);
    }
    let mut groups: HashMap<Packed, Vec<usize>> = HashMap::new();
    for (mask, &l) in lcm.iter().enumerate() {
        groups.entry(l).or_default().push(mask);
    }

    let mut table = BettiTable::new();
    for (b, faces) in groups {
        let deg = packed_degree(b, n);
        let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &f in &faces {
            by_size.entry(f.count_ones() as usize).or_default().push(f);
        }
        let max_size = *by_size.keys().last().expect("group is nonempty");
        // ranks[k] = rank of the boundary from size k to size k - 1
        let mut ranks = vec![0usize; max_size + 2];
        #[allow(clippy::needless_range_loop)]
        for k in 1..=max_size {
            let (Some(src), Some(dst)) = (by_size.get(&k), by_size.get(&(k - 1))) else {
                continue;
            };
            let index: HashMap<usize, usize> = dst.iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rows: Vec<Vec<i64>> = src
                .iter()
                .map(|&f| {
                    let mut row = vec![0i64; dst.len()];
                    let mut pos = 0;
                    for j in 0..m {
                        if f & (1 << j) == 0 {
                            continue;
                        }
                        if let Some(&c) = index.get(&(f & !(1 << j))) {
                            row[c] = if pos % 2 == 0 { 1 } else { -1 };
                        }
                        pos += 1;
                    }
                    row
                })
                .collect();
            ranks[k] = rank(&rows);
        }
        for (&k, fs) in &by_size {
            let h = fs.len() - ranks[k] - ranks[k + 1];
            table.add(k, deg, h);
        }
    }
    Ok(table)
}

/// The finite box `0 <= b <= lcm(gens)` with a membership table for `I`.
struct Staircase {
    n: usize,
    dims: Vec<usize>,
    strides: Vec<usize>,
    in_ideal: Vec<bool>,
}

impl Staircase {
    fn new(gens: &[Monomial], n: usize) -> Self {
        let dims: Vec<usize> =
            (0..n).map(|i| gens.iter().map(|g| g.exponent(i) as usize).max().unwrap_or(0) + 1).collect();
        let mut strides = vec![1; n];
        for i in 1..n {
            strides[i] = strides[i - 1] * dims[i - 1];
        }
        let size = dims.iter().product();
        let mut in_ideal = vec![false; size];
        for g in gens {
            in_ideal[Self::index_of(&strides, g.exponents().iter().map(|&e| e as usize))] = true;
        }
        // b is in I iff b is a generator or b - e_i is in I for some i
        let mut coords = vec![0usize; n];
        for idx in 0..size {
            if !in_ideal[idx] {
                in_ideal[idx] = (0..n).any(|i| coords[i] > 0 && in_ideal[idx - strides[i]]);
            }
            for i in 0..n {
                coords[i] += 1;
                if coords[i] < dims[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
        Self { n, dims, strides, in_ideal }
    }

    fn index_of(strides: &[usize], coords: impl Iterator<Item = usize>) -> usize {
        coords.zip(strides).map(|(c, s)| c * s).sum()
    }

    fn size(&self) -> usize {
        self.in_ideal.len()
    }

    fn coords(&self, mut idx: usize) -> Vec<usize> {
        (0..self.n)
            .map(|i| {
                let c = idx % self.dims[i];
                idx /= self.dims[i];
                c
            })
            .collect()
    }
}

/// Betti numbers of `S/I` from the upper Koszul simplicial complexes:
/// `β_{i,b}(I) = dim H̃_{i-1}(K^b)` with `K^b = { F ⊆ supp(b) : x^(b-F) ∈ I }`.
///
/// Works on the box below the lcm of the generators, so the cost does not
/// depend on the number of generators.
pub fn koszul_betti(gens: &[Monomial], n: usize) -> Result<BettiTable> {
    check_packable(gens, n)?;
    let gens = minimalize(gens);
    let mut table = BettiTable::new();
    table.add(0, 0, 1);
    if gens.is_empty() {
        return Ok(table);
    }
    let sc = Staircase::new(&gens, n);
    for idx in 0..sc.size() {
        if !sc.in_ideal[idx] {
            continue;
        }
        let b = sc.coords(idx);
        // Nonzero Betti numbers only occur at lcms of generators.
        let top = gens
            .iter()
            .filter(|g| g.exponents().iter().zip(&b).all(|(&e, &c)| e as usize <= c))
            .fold(vec![0usize; n], |acc, g| acc.iter().zip(g.exponents()).map(|(&a, &e)| a.max(e as usize)).collect());
        if top != b {
            continue;
        }
        let support: Vec<usize> = (0..n).filter(|&i| b[i] > 0).collect();
        let k = support.len();
        let in_complex = |f: usize| {
            let off: usize = (0..k).filter(|&t| f & (1 << t) != 0).map(|t| sc.strides[support[t]]).sum();
            sc.in_ideal[idx - off]
        };
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
        for f in 0..(1usize << k) {
            if in_complex(f) {
                by_size[f.count_ones() as usize].push(f);
            }
        }
        let mut ranks = vec![0usize; k + 2];
        for s in 1..=k {
            if by_size[s].is_empty() {
                continue;
            }
            let index: HashMap<usize, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rows: Vec<Vec<i64>> = by_size[s]
                .iter()
                .map(|&f| {
                    let mut row = vec![0i64; by_size[s - 1].len()];
                    let mut pos = 0;
                    for t in 0..k {
                        if f & (1 << t) == 0 {
                            continue;
                        }
                        let c = index[&(f & !(1 << t))];
                        row[c] = if pos % 2 == 0 { 1 } else { -1 };
                        pos += 1;
                    }
                    row
                })
                .collect();
            ranks[s] = rank(&rows);
        }
        let deg: u32 = b.iter().map(|&c| c as u32).sum();
        for s in 0..=k {
            let h = by_size[s].len() - ranks[s] - ranks[s + 1];
            table.add(s + 1, deg, h);
        }
    }
    Ok(table)
}

/// Taylor complex for small generating sets, Koszul-simplicial otherwise.
pub fn betti_table(gens: &[Monomial], n: usize) -> Result<BettiTable> {
    if minimalize(gens).len() <= TAYLOR_AUTO_LIMIT {
        taylor_betti(gens, n, DEFAULT_CAP)
    } else {
        koszul_betti(gens, n)
    }
}

/// Minimal vertex covers of the hypergraph of generator supports; these are
/// the minimal primes `(x_i : i ∈ C)` of the ideal.
pub fn minimal_primes(gens: &[Monomial], n: usize) -> Result<Vec<BTreeSet<usize>>> {
    if gens.is_empty() {
        return Err(Error::EmptySet);
    }
    if gens.iter().any(Monomial::is_one) {
        return Err(Error::Unsupported("the unit ideal has no minimal primes".into()));
    }
    if n > 24 {
        return Err(Error::Unsupported(format!("vertex-cover search over {n} variables")));
    }
    let edges: Vec<u32> = gens.iter().map(|g| g.support().fold(0u32, |acc, i| acc | (1 << i))).collect();
    let covers = |c: u32| edges.iter().all(|&e| e & c != 0);
    let mut out = Vec::new();
    for c in 0u32..(1 << n) {
        if covers(c) && (0..n).all(|i| c & (1 << i) == 0 || !covers(c & !(1 << i))) {
            out.push((0..n).filter(|&i| c & (1 << i) != 0).collect::<BTreeSet<_>>());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `dim S/I = n - (smallest vertex cover)`.
pub fn dimension(gens: &[Monomial], n: usize) -> Result<usize> {
    let primes = minimal_primes(gens, n)?;
    Ok(n - primes.iter().map(BTreeSet::len).min().expect("a cover exists"))
}

/// `Σ_{σ ⊆ gens} (-1)^|σ| t^deg(lcm σ)`.
pub fn k_polynomial(gens: &[Monomial], n: usize, cap: usize) -> Result<IntPoly> {
    check_packable(gens, n)?;
    if gens.len() > cap {
        return Err(Error::CapacityExceeded { count: gens.len(), cap });
    }
    let packed: Vec<Packed> = gens.iter().map(pack).collect();
    let top = packed.iter().fold(0, |acc, &p| packed_lcm(acc, p, n));
    let mut coeffs = vec![0i64; packed_degree(top, n) as usize + 1];
    fn walk(packed: &[Packed], n: usize, start: usize, cur: Packed, sign: i64, coeffs: &mut [i64]) {
        coeffs[packed_degree(cur, n) as usize] += sign;
        for k in start..packed.len() {
            walk(packed, n, k + 1, packed_lcm(cur, packed[k], n), -sign, coeffs);
        }
    }
    walk(&packed, n, 0, 0, 1, &mut coeffs);
    Ok(IntPoly::from_coeffs(coeffs))
}

/// The same K-polynomial from the staircase: the coefficient of `x^b` in
/// `H(S/I) * Π(1 - x_i)` is `Σ_F (-1)^|F| [x^(b-F) ∉ I]`, and it vanishes
/// outside the box below the lcm of the generators.
pub fn k_polynomial_staircase(gens: &[Monomial], n: usize) -> Result<IntPoly> {
    for g in gens {
        if g.n() != n {
            return Err(Error::ContextMismatch { left: n, right: g.n() });
        }
    }
    let gens = minimalize(gens);
    let sc = Staircase::new(&gens, n);
    let mut p = IntPoly::zero();
    for idx in 0..sc.size() {
        let b = sc.coords(idx);
        let mut c = 0i64;
        for f in 0u32..(1 << n) {
            if (0..n).any(|i| f & (1 << i) != 0 && b[i] == 0) {
                continue;
            }
            let off: usize = (0..n).filter(|&i| f & (1 << i) != 0).map(|i| sc.strides[i]).sum();
            if !sc.in_ideal[idx - off] {
                c += if f.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
        if c != 0 {
            p.add_term(b.iter().sum(), c);
        }
    }
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleInvariants {
    pub depth: usize,
    pub dim: usize,
    pub projdim: usize,
    pub cohen_macaulay: bool,
}

/// Depth via Auslander–Buchsbaum on the Betti table, dimension via covers.
pub fn depth_dim(gens: &[Monomial], n: usize) -> Result<OracleInvariants> {
    let projdim = betti_table(gens, n)?.projdim();
    let depth = n - projdim;
    let dim = dimension(gens, n)?;
    Ok(OracleInvariants { depth, dim, projdim, cohen_macaulay: depth == dim })
}

/// `(prefix) : w` by definition: `lcm(p, w) / w` for every `p`, then
/// minimalized. Output lex-descending.
pub fn colon(prefix: &[Monomial], w: &Monomial) -> Vec<Monomial> {
    let quotients: Vec<Monomial> = prefix.iter().map(|p| p.lcm(w).checked_div(w).expect("w | lcm")).collect();
    let mut out = minimalize(&quotients);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Variables `x_k` with `x_k w` in `(prefix)`, by divisibility scan.
pub fn colon_variables(prefix: &[Monomial], w: &Monomial) -> BTreeSet<usize> {
    (0..w.n()).filter(|&k| prefix.iter().any(|p| p.divides(&w.mul_var(k)))).collect()
}

/// Position of the first generator of `order` dividing `m`.
pub fn decomposition_index(order: &[Monomial], m: &Monomial) -> Option<usize> {
    order.iter().position(|g| g.divides(m))
}

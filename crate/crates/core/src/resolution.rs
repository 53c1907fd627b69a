//! Minimal graded free resolutions of `S/I` for ideals with linear quotients,
//! built by iterated mapping cones, and an exact certificate for them.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::classify::{has_linear_resolution, normalize};
use crate::error::{Error, Result};
use crate::linalg::sparse_rank;
use crate::monomial::Monomial;
use crate::oracle::BettiTable;
use crate::poly::IntPoly;
use crate::quotients::{g_branch, prec_order, OrderedGenerators};
use crate::segment::Lexsegment;

/// The basis element `f(σ; u)` of `F_{|σ|+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisSymbol {
    /// Sorted, 0-based, a subset of `set(u)`.
    pub sigma: Vec<usize>,
    /// Position of `u` in the generator order.
    pub gen: usize,
    pub generator: Monomial,
}

impl BasisSymbol {
    pub fn position(&self) -> usize {
        self.sigma.len() + 1
    }

    pub fn degree(&self) -> u32 {
        self.sigma.len() as u32 + self.generator.degree()
    }

    /// `x_σ u`.
    pub fn multidegree(&self) -> Monomial {
        self.sigma.iter().fold(self.generator.clone(), |m, &s| m.mul_var(s))
    }
}

/// `sign * mono` at (`row`, `col`); columns are source basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub mono: Monomial,
}

/// A sparse matrix whose entries are signed monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Sorted by column, then row; at most one entry per cell.
    pub entries: Vec<Entry>,
}

impl DifferentialMatrix {
    pub fn get(&self, row: usize, col: usize) -> Option<(i8, &Monomial)> {
        self.entries.iter().find(|e| e.row == row && e.col == col).map(|e| (e.sign, &e.mono))
    }

    /// Reorder rows and columns: new row `k` is old row `row_order[k]`.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> Self {
        let inv = |order: &[usize]| {
            let mut inv = vec![0; order.len()];
            for (k, &old) in order.iter().enumerate() {
                inv[old] = k;
            }
            inv
        };
        let (ri, ci) = (inv(row_order), inv(col_order));
        let mut entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|e| Entry { row: ri[e.row], col: ci[e.col], sign: e.sign, mono: e.mono.clone() })
            .collect();
        entries.sort_by_key(|e| (e.col, e.row));
        Self { rows: self.rows, cols: self.cols, entries }
    }

    /// Dense textual form, one string per cell such as `"-x2"` or `"0"`.
    pub fn render(&self) -> Vec<Vec<String>> {
        let mut out = vec![vec!["0".to_string(); self.cols]; self.rows];
        for e in &self.entries {
            let sign = if e.sign < 0 { "-" } else { "" };
            out[e.row][e.col] = format!("{sign}{}", e.mono);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Closed-form decomposition function of a completely lexsegment ideal.
    Lexsegment,
    /// Decomposition function found by scanning an explicit order.
    MappingCone,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedResolution {
    n: usize,
    generators: Vec<Monomial>,
    sets: Vec<BTreeSet<usize>>,
    /// `bases[i - 1]` is the basis of `F_i`.
    bases: Vec<Vec<BasisSymbol>>,
    /// `maps[i]: F_{i+1} -> F_i`.
    maps: Vec<DifferentialMatrix>,
    construction: Construction,
}

impl GradedResolution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// Largest `i` with `F_i != 0`.
    pub fn length(&self) -> usize {
        self.bases.len()
    }

    /// Basis of `F_i`; `F_0 = S` has no symbols.
    pub fn basis(&self, i: usize) -> &[BasisSymbol] {
        if i == 0 {
            &[]
        } else {
            &self.bases[i - 1]
        }
    }

    pub fn maps(&self) -> &[DifferentialMatrix] {
        &self.maps
    }

    /// `maps()[i]`, the map `F_{i+1} -> F_i`.
    pub fn map(&self, i: usize) -> &DifferentialMatrix {
        &self.maps[i]
    }

    pub fn ranks(&self) -> Vec<usize> {
        std::iter::once(1).chain(self.bases.iter().map(Vec::len)).collect()
    }

    /// Degrees of the basis elements at each position (`[0]` at position 0).
    pub fn twists(&self) -> Vec<Vec<u32>> {
        std::iter::once(vec![0]).chain(self.bases.iter().map(|b| b.iter().map(BasisSymbol::degree).collect())).collect()
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, degrees) in self.twists().into_iter().enumerate() {
            for j in degrees {
                t.add(i, j, 1);
            }
        }
        t
    }

    /// Index of `f(σ; u_gen)` in the basis of `F_{|σ|+1}`.
    pub fn index_of(&self, sigma: &[usize], gen: usize) -> Option<usize> {
        self.bases.get(sigma.len())?.iter().position(|b| b.gen == gen && b.sigma == sigma)
    }

    /// A copy with the sign of one entry of `maps()[map]` reversed.
    pub fn with_flipped_sign(&self, map: usize, entry: usize) -> Self {
        let mut out = self.clone();
        let e = &mut out.maps[map].entries[entry];
        e.sign = -e.sign;
        out
    }
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in subsets_of_size(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Betti numbers of `S/I` read off the sets of an order with linear
/// quotients: `β_{i, d+i-1} = Σ_w C(|set(w)|, i-1)`.
pub fn betti_from_sets(order: &OrderedGenerators) -> Result<BettiTable> {
    let gens = order.generators();
    let d = gens.first().ok_or(Error::EmptySet)?.degree();
    if gens.iter().any(|g| g.degree() != d) {
        return Err(Error::MixedDegrees);
    }
    let mut t = BettiTable::new();
    t.add(0, 0, 1);
    for j in 0..gens.len() {
        let size = order.set_of(j)?.len();
        let mut binom = 1usize;
        for k in 0..=size {
            t.add(k + 1, d + k as u32, binom);
            binom = binom * (size - k) / (k + 1);
        }
    }
    Ok(t)
}

/// Mapping-cone complex for `gens` with linear quotients, given the sets and
/// the decomposition function as a position map `g(j, s) = pos(g(x_s u_j))`.
fn assemble(
    n: usize,
    gens: Vec<Monomial>,
    sets: Vec<BTreeSet<usize>>,
    construction: Construction,
    g: impl Fn(usize, usize) -> Result<usize>,
) -> Result<GradedResolution> {
    let top = sets.iter().map(BTreeSet::len).max().unwrap_or(0);
    let mut bases: Vec<Vec<BasisSymbol>> = vec![Vec::new(); top + 1];
    for (j, set) in sets.iter().enumerate() {
        let items: Vec<usize> = set.iter().copied().collect();
        for (k, basis) in bases.iter_mut().enumerate() {
            for sigma in subsets_of_size(&items, k) {
                basis.push(BasisSymbol { sigma, gen: j, generator: gens[j].clone() });
            }
        }
    }
    let index: Vec<HashMap<(usize, Vec<usize>), usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, s)| ((s.gen, s.sigma.clone()), i)).collect()).collect();

    let mut maps = Vec::with_capacity(bases.len());
    maps.push(DifferentialMatrix {
        rows: 1,
        cols: gens.len(),
        entries: gens.iter().enumerate().map(|(j, w)| Entry { row: 0, col: j, sign: 1, mono: w.clone() }).collect(),
    });
    for k in 1..bases.len() {
        let mut entries = Vec::new();
        for (col, sym) in bases[k].iter().enumerate() {
            let w = &gens[sym.gen];
            let mut column = Vec::new();
            for (alpha, &s) in sym.sigma.iter().enumerate() {
                let sign: i8 = if alpha % 2 == 0 { 1 } else { -1 };
                let mut rest = sym.sigma.clone();
                rest.remove(alpha);
                let row = index[k - 1][&(sym.gen, rest.clone())];
                column.push(Entry { row, col, sign: -sign, mono: Monomial::var(n, s) });
                let h = g(sym.gen, s)?;
                if rest.iter().all(|t| sets[h].contains(t)) {
                    let mono = w.mul_var(s).checked_div(&gens[h]).ok_or_else(|| {
                        Error::Unsupported(format!("g(x{} {w}) = {} does not divide it", s + 1, gens[h]))
                    })?;
                    let row = index[k - 1][&(h, rest)];
                    column.push(Entry { row, col, sign, mono });
                }
            }
            column.sort_by_key(|e| e.row);
            entries.extend(column);
        }
        maps.push(DifferentialMatrix { rows: bases[k - 1].len(), cols: bases[k].len(), entries });
    }
    Ok(GradedResolution { n, generators: gens, sets, bases, maps, construction })
}

/// The resolution of `S/(L(u, v))` for a completely lexsegment ideal with
/// linear resolution, ordered by `≺` and using the closed-form `g`.
///
/// Segments are first brought to normal form; generators, sets and `g` are
/// computed there and mapped back.
pub fn build_resolution(seg: &Lexsegment) -> Result<GradedResolution> {
    let lr = has_linear_resolution(seg);
    if !lr.linear {
        return Err(Error::Unsupported(format!("L({}, {}) has no linear resolution", seg.u(), seg.v())));
    }
    if !lr.complete {
        return Err(Error::Unsupported(format!(
            "L({}, {}) is not completely lexsegment; only the Betti numbers from sets are available",
            seg.u(),
            seg.v()
        )));
    }
    let n = seg.n();
    let nf = normalize(seg);
    if nf.principal {
        return assemble(n, vec![seg.u().clone()], vec![BTreeSet::new()], Construction::Lexsegment, |_, _| {
            unreachable!("a principal ideal has empty sets")
        });
    }
    let k = nf.dropped_leading_vars;
    let r = &nf.segment;
    let reduced = OrderedGenerators::new(prec_order(r))?;
    let position: HashMap<&Monomial, usize> = reduced.generators().iter().enumerate().map(|(j, w)| (w, j)).collect();
    let mut sets = Vec::with_capacity(reduced.len());
    for j in 0..reduced.len() {
        sets.push(reduced.set_of(j)?.iter().map(|s| s + k).collect());
    }
    let gens = reduced.generators().iter().map(|w| nf.lift(w)).collect();
    let rv = r.v().clone();
    assemble(n, gens, sets, Construction::Lexsegment, |j, s| {
        let w = &reduced.generators()[j];
        let image = g_branch(&rv, w, s - k);
        position.get(&image).copied().ok_or_else(|| Error::NotInIdeal(image.to_string()))
    })
}

/// The mapping-cone resolution for an explicit order with linear quotients
/// and a regular decomposition function.
pub fn resolution_from_order(gens: Vec<Monomial>) -> Result<GradedResolution> {
    let n = gens.first().ok_or(Error::EmptySet)?.n();
    let order = OrderedGenerators::new(gens)?;
    let regularity = order.regularity()?;
    if let Some(w) = regularity.witness {
        return Err(Error::Unsupported(format!(
            "decomposition function is not regular: set(g(x{} {})) = set({}) is not contained in set({})",
            w.var + 1,
            w.generator,
            w.image,
            w.generator
        )));
    }
    let sets = (0..order.len()).map(|j| order.set_of(j).cloned()).collect::<Result<Vec<_>>>()?;
    assemble(n, order.generators().to_vec(), sets, Construction::MappingCone, |j, s| {
        order.decomposition_index(&order.generators()[j].mul_var(s))
    })
}

/// `Σ_i (-1)^i Σ_{basis of F_i} t^deg`.
pub fn hilbert_numerator(res: &GradedResolution) -> IntPoly {
    res.betti().euler_polynomial()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    /// Homological position where the check failed.
    pub position: usize,
    pub degree: Option<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub ok: bool,
    pub failure: Option<CheckFailure>,
}

impl Check {
    fn pass() -> Self {
        Self { ok: true, failure: None }
    }

    fn fail(position: usize, degree: Option<u32>, detail: String) -> Self {
        Self { ok: false, failure: Some(CheckFailure { position, degree, detail }) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub composition: Check,
    pub minimality: Check,
    pub homogeneity: Check,
    pub exactness: Check,
    /// Exactness holds in every internal degree up to this one.
    pub checked_degree: u32,
    pub multidegrees_checked: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.composition.ok && self.minimality.ok && self.homogeneity.ok && self.exactness.ok
    }
}

/// Default bound for [`verify_resolution`]: `d + n + 2`.
pub fn default_check_degree(res: &GradedResolution) -> u32 {
    let d = res.generators.iter().map(Monomial::degree).max().unwrap_or(0);
    d + res.n as u32 + 2
}

fn symbol_multidegree(res: &GradedResolution, position: usize, index: usize) -> Monomial {
    if position == 0 {
        Monomial::one(res.n)
    } else {
        res.bases[position - 1][index].multidegree()
    }
}

fn check_composition(res: &GradedResolution) -> Check {
    for k in 1..res.maps.len() {
        let (outer, inner) = (&res.maps[k - 1], &res.maps[k]);
        let mut by_col: Vec<Vec<&Entry>> = vec![Vec::new(); outer.cols];
        for e in &outer.entries {
            by_col[e.col].push(e);
        }
        let mut acc: HashMap<(usize, usize, Monomial), i64> = HashMap::new();
        for e in &inner.entries {
            for f in &by_col[e.row] {
                *acc.entry((e.col, f.row, e.mono.mul(&f.mono))).or_insert(0) += (e.sign * f.sign) as i64;
            }
        }
        let mut bad: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        bad.sort();
        if let Some(((col, row, mono), c)) = bad.into_iter().next() {
            return Check::fail(
                k + 1,
                None,
                format!(
                    "composition F_{} -> F_{} has coefficient {c} at {mono} in row {row}, column {col}",
                    k + 1,
                    k - 1
                ),
            );
        }
    }
    Check::pass()
}

fn check_minimality(res: &GradedResolution) -> Check {
    for (k, map) in res.maps.iter().enumerate() {
        if let Some(e) = map.entries.iter().find(|e| e.mono.is_one()) {
            return Check::fail(k + 1, None, format!("unit entry at row {}, column {}", e.row, e.col));
        }
    }
    Check::pass()
}

/// Every entry must be multihomogeneous: `mdeg(row) * mono = mdeg(col)`.
fn check_homogeneity(res: &GradedResolution) -> Check {
    for (k, map) in res.maps.iter().enumerate() {
        for e in &map.entries {
            let target = symbol_multidegree(res, k, e.row);
            let source = symbol_multidegree(res, k + 1, e.col);
            if target.mul(&e.mono) != source {
                return Check::fail(
                    k + 1,
                    Some(source.degree()),
                    format!("entry {} at row {}, column {} maps {} to {}", e.mono, e.row, e.col, source, target),
                );
            }
        }
    }
    Check::pass()
}

/// Exactness of the strand of every multidegree `b` with `|b| <= bound`.
///
/// In multidegree `b` the complex is the rational complex on the symbols with
/// multidegree dividing `b`, with the signs of the entries as matrix. It only
/// depends on the lcm of those multidegrees, so only lcm-closed `b` are
/// visited. Exactness in every multidegree of a degree is exactness of that
/// graded piece.
fn check_exactness(res: &GradedResolution, ideal: &[Monomial], bound: u32) -> (Check, usize) {
    let n = res.n;
    let symbols: Vec<Vec<Monomial>> = (1..=res.length())
        .map(|i| (0..res.bases[i - 1].len()).map(|j| symbol_multidegree(res, i, j)).collect())
        .collect();
    let all: Vec<&Monomial> = symbols.iter().flatten().chain(ideal).collect();
    let dims: Vec<usize> = (0..n).map(|i| all.iter().map(|m| m.exponent(i) as usize).max().unwrap_or(0) + 1).collect();
    let mut strides = vec![1usize; n];
    for i in 1..n {
        strides[i] = strides[i - 1] * dims[i - 1];
    }
    let size: usize = dims.iter().product();
    let flat = |m: &Monomial| (0..n).map(|i| m.exponent(i) as usize * strides[i]).sum::<usize>();

    // closure[b] = lcm of the symbol and generator multidegrees dividing b
    let mut closure: Vec<Vec<u32>> = vec![vec![0; n]; size];
    let mut present = vec![false; size];
    for m in &all {
        present[flat(m)] = true;
    }
    let mut coords = vec![0usize; n];
    for idx in 0..size {
        let mut c = if present[idx] { coords.iter().map(|&x| x as u32).collect() } else { vec![0; n] };
        for i in 0..n {
            if coords[i] > 0 {
                for (a, &b) in c.iter_mut().zip(&closure[idx - strides[i]]) {
                    *a = (*a).max(b);
                }
            }
        }
        closure[idx] = c;
        for i in 0..n {
            coords[i] += 1;
            if coords[i] < dims[i] {
                break;
            }
            coords[i] = 0;
        }
    }

    let mut visited = 0;
    let mut coords = vec![0usize; n];
    for target in &closure {
        let here: Vec<u32> = coords.iter().map(|&x| x as u32).collect();
        for i in 0..n {
            coords[i] += 1;
            if coords[i] < dims[i] {
                break;
            }
            coords[i] = 0;
        }
        let degree: u32 = here.iter().sum();
        if *target != here || degree > bound {
            continue;
        }
        visited += 1;
        let b = Monomial::new(here);
        let live: Vec<Vec<usize>> =
            symbols.iter().map(|s| (0..s.len()).filter(|&j| s[j].divides(&b)).collect()).collect();
        // ranks[i] = rank of F_{i+1}(b) -> F_i(b), one sparse row per source
        let mut ranks = vec![0usize; res.length() + 1];
        for (i, map) in res.maps.iter().enumerate() {
            if live[i].is_empty() {
                continue;
            }
            let mut local = vec![usize::MAX; map.cols];
            for (k, &c) in live[i].iter().enumerate() {
                local[c] = k;
            }
            let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); live[i].len()];
            for e in &map.entries {
                if local[e.col] != usize::MAX {
                    rows[local[e.col]].push((e.row, e.sign as i64));
                }
            }
            ranks[i] = sparse_rank(&rows);
        }
        let in_ideal = ideal.iter().any(|g| g.divides(&b));
        if 1 - ranks[0] != usize::from(!in_ideal) {
            return (
                Check::fail(0, Some(degree), format!("cokernel in multidegree {b} has dimension {}", 1 - ranks[0])),
                visited,
            );
        }
        for i in 1..=res.length() {
            let dim = live[i - 1].len();
            if dim != ranks[i - 1] + ranks[i] {
                return (
                    Check::fail(
                        i,
                        Some(degree),
                        format!("homology of dimension {} in multidegree {b}", dim - ranks[i - 1] - ranks[i]),
                    ),
                    visited,
                );
            }
        }
    }
    (Check::pass(), visited)
}

/// Certify that `res` is a minimal graded free resolution of `S/(ideal)`
/// through internal degree `max_check_degree` (default `d + n + 2`).
pub fn verify_resolution(
    res: &GradedResolution,
    ideal: &[Monomial],
    max_check_degree: Option<u32>,
) -> VerificationReport {
    let bound = max_check_degree.unwrap_or_else(|| default_check_degree(res));
    let composition = check_composition(res);
    let minimality = check_minimality(res);
    let homogeneity = check_homogeneity(res);
    let (exactness, multidegrees_checked) = if homogeneity.ok {
        check_exactness(res, ideal, bound)
    } else {
        (Check::fail(0, None, "exactness is only certified for multihomogeneous maps".into()), 0)
    };
    VerificationReport { composition, minimality, homogeneity, exactness, checked_degree: bound, multidegrees_checked }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::AmbientContext;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn five() -> Vec<Monomial> {
        vec![m(&[0, 3, 0]), m(&[1, 2, 0]), m(&[1, 1, 1]), m(&[1, 0, 2]), m(&[2, 1, 0])]
    }

    #[test]
    fn five_generator_ranks_and_sets() {
        let res = resolution_from_order(five()).unwrap();
        let sets: Vec<Vec<usize>> = res.sets().iter().map(|s| s.iter().map(|i| i + 1).collect()).collect();
        assert_eq!(sets, vec![vec![], vec![2], vec![2], vec![2], vec![2, 3]]);
        assert_eq!(res.ranks(), vec![1, 5, 5, 1]);
        assert_eq!(hilbert_numerator(&res), IntPoly::from_coeffs(vec![1, 0, 0, -5, 5, -1]));
        let report = verify_resolution(&res, &five(), None);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checked_degree, 8);
    }

    #[test]
    fn five_generator_second_map() {
        let res = resolution_from_order(five()).unwrap();
        let col: Vec<String> = res.map(2).render().into_iter().map(|r| r[0].clone()).collect();
        assert_eq!(col, ["0", "-x1", "0", "x3", "-x2"]);
    }

    #[test]
    fn sign_flip_is_detected() {
        let res = resolution_from_order(five()).unwrap();
        let bad = res.with_flipped_sign(2, 0);
        let report = verify_resolution(&bad, &five(), None);
        assert!(!report.composition.ok);
        assert!(!report.passed());
    }

    #[test]
    fn principal() {
        let ctx = AmbientContext::new(3, 2).unwrap();
        let seg = Lexsegment::new(ctx, m(&[0, 1, 1]), m(&[0, 1, 1])).unwrap();
        let res = build_resolution(&seg).unwrap();
        assert_eq!(res.ranks(), vec![1, 1]);
        assert_eq!(hilbert_numerator(&res), IntPoly::from_coeffs(vec![1, 0, -1]));
        assert!(verify_resolution(&res, seg.generators(), None).passed());
    }

    #[test]
    fn example_segment_matches_scan() {
        let ctx = AmbientContext::new(3, 3).unwrap();
        let seg = Lexsegment::new(ctx, m(&[1, 1, 1]), m(&[0, 1, 2])).unwrap();
        let res = build_resolution(&seg).unwrap();
        assert_eq!(res.ranks(), vec![1, 5, 5, 1]);
        let scanned = resolution_from_order(res.generators().to_vec()).unwrap();
        assert_eq!(res.maps(), scanned.maps());
        assert!(verify_resolution(&res, seg.generators(), None).passed());
    }

    #[test]
    fn non_complete_is_refused() {
        let ctx = AmbientContext::new(6, 4).unwrap();
        let seg = Lexsegment::new(ctx, m(&[1, 0, 2, 0, 1, 0]), m(&[0, 1, 0, 0, 0, 3])).unwrap();
        assert!(matches!(build_resolution(&seg), Err(Error::Unsupported(_))));
    }

    #[test]
    fn betti_from_sets_binomials() {
        let order = OrderedGenerators::new(five()).unwrap();
        let t = betti_from_sets(&order).unwrap();
        assert_eq!((t.get(1, 3), t.get(2, 4), t.get(3, 5)), (5, 5, 1));
    }
}

//! Generator orders, positional colon ideals, `set(w)` and the decomposition
//! function.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::{has_linear_resolution, non_complete_shape, normalize};
use crate::error::{Error, Result};
use crate::monomial::{barlex, lex, prec, Monomial};
use crate::segment::Lexsegment;

/// Minimal monomial generators of `(prefix) : w`, lex-descending.
pub fn colon_generators(prefix: &[Monomial], w: &Monomial) -> Vec<Monomial> {
    let mut cands: Vec<Monomial> = prefix.iter().map(|p| p.checked_div(&p.gcd(w)).expect("gcd divides")).collect();
    cands.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lex(b, a)));
    cands.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for c in cands {
        if !minimal.iter().any(|m| m.divides(&c)) {
            minimal.push(c);
        }
    }
    minimal.sort_by(|a, b| lex(b, a));
    minimal
}

/// Where a sequence stops having linear quotients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientFailure {
    /// 0-based position of the offending generator.
    pub index: usize,
    pub generator: Monomial,
    pub colon: Vec<Monomial>,
}

/// A generator sequence with its positional colon data precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGenerators {
    gens: Vec<Monomial>,
    colons: Vec<Vec<Monomial>>,
    sets: Vec<BTreeSet<usize>>,
}

impl OrderedGenerators {
    pub fn new(gens: Vec<Monomial>) -> Result<Self> {
        if let Some(first) = gens.first() {
            if let Some(bad) = gens.iter().find(|g| g.n() != first.n()) {
                return Err(Error::ContextMismatch { left: first.n(), right: bad.n() });
            }
        }
        for (j, g) in gens.iter().enumerate() {
            if gens[..j].contains(g) {
                return Err(Error::DuplicateGenerator(j));
            }
        }
        let colons: Vec<_> = (0..gens.len()).map(|j| colon_generators(&gens[..j], &gens[j])).collect();
        let sets = colons
            .iter()
            .map(|c| c.iter().filter(|m| m.degree() == 1).map(|m| m.min_var().unwrap()).collect())
            .collect();
        Ok(Self { gens, colons, sets })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn colon(&self, j: usize) -> &[Monomial] {
        &self.colons[j]
    }

    pub fn position(&self, g: &Monomial) -> Option<usize> {
        self.gens.iter().position(|x| x == g)
    }

    pub fn first_failure(&self) -> Option<QuotientFailure> {
        self.failure_up_to(self.len())
    }

    fn failure_up_to(&self, end: usize) -> Option<QuotientFailure> {
        (0..end).find(|&j| self.colons[j].iter().any(|m| m.degree() != 1)).map(|j| QuotientFailure {
            index: j,
            generator: self.gens[j].clone(),
            colon: self.colons[j].clone(),
        })
    }

    pub fn has_linear_quotients(&self) -> bool {
        self.first_failure().is_none()
    }

    /// `set(u_j)` as 0-based variable indices.
    pub fn set_of(&self, j: usize) -> Result<&BTreeSet<usize>> {
        if let Some(f) = self.failure_up_to(j + 1) {
            return Err(Error::NotLinearQuotients { position: f.index });
        }
        Ok(&self.sets[j])
    }

    /// Position of `g(m)`: the first generator dividing `m`. With all
    /// generators of one degree this is the least `j` with `m ∈ (u_1..u_j)`.
    pub fn decomposition_index(&self, m: &Monomial) -> Result<usize> {
        self.gens.iter().position(|g| g.divides(m)).ok_or_else(|| Error::NotInIdeal(m.to_string()))
    }

    pub fn decomposition_g(&self, m: &Monomial) -> Result<&Monomial> {
        Ok(&self.gens[self.decomposition_index(m)?])
    }

    /// Whether `set(g(x_s u)) ⊆ set(u)` for every generator `u` and `s ∈ set(u)`.
    pub fn regularity(&self) -> Result<Regularity> {
        if let Some(f) = self.first_failure() {
            return Err(Error::NotLinearQuotients { position: f.index });
        }
        for (j, u) in self.gens.iter().enumerate() {
            for &s in &self.sets[j] {
                let k = self.decomposition_index(&u.mul_var(s))?;
                if !self.sets[k].is_subset(&self.sets[j]) {
                    return Ok(Regularity {
                        regular: false,
                        witness: Some(RegularityWitness {
                            index: j,
                            generator: u.clone(),
                            var: s,
                            image: self.gens[k].clone(),
                            image_set: self.sets[k].clone(),
                            set: self.sets[j].clone(),
                        }),
                    });
                }
            }
        }
        Ok(Regularity { regular: true, witness: None })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub regular: bool,
    pub witness: Option<RegularityWitness>,
}

/// A generator `u` and `s ∈ set(u)` with `set(g(x_s u)) ⊄ set(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub index: usize,
    pub generator: Monomial,
    pub var: usize,
    pub image: Monomial,
    pub image_set: BTreeSet<usize>,
    pub set: BTreeSet<usize>,
}

/// Whether `order` has linear quotients, with the first failure if not.
pub fn has_linear_quotients(order: &[Monomial]) -> Result<Option<QuotientFailure>> {
    Ok(OrderedGenerators::new(order.to_vec())?.first_failure())
}

/// The generators of `L(u, v)` sorted `≺`-ascending.
pub fn prec_order(seg: &Lexsegment) -> Vec<Monomial> {
    let mut gens = seg.generators().to_vec();
    gens.sort_by(prec);
    gens
}

/// Generators not divisible by `x1` lex-descending, then the rest
/// descending in lex with the variables reversed.
pub fn split_order(seg: &Lexsegment) -> Vec<Monomial> {
    let (mut j, mut k): (Vec<_>, Vec<_>) = seg.generators().iter().cloned().partition(|w| w.exponent(0) == 0);
    j.sort_by(|a, b| lex(b, a));
    k.sort_by(|a, b| barlex(b, a));
    j.extend(k);
    j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    /// `≺`-ascending.
    Prec,
    /// Generators without `x1` first, then those with `x1`.
    #[serde(rename = "j-then-k")]
    Split,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientOrder {
    pub generators: Vec<Monomial>,
    pub kind: OrderKind,
    /// Linear quotients are guaranteed only when the ideal has a linear
    /// resolution.
    pub guaranteed: bool,
}

/// The order under which a lexsegment ideal with linear resolution has linear
/// quotients: the split order when the normal form has the shape
/// `u = x1 x_{l+1}^.. xn^..`, `v = x_l xn^(d-1)`, and `≺` otherwise.
///
/// The split order only needs that shape, so it is also used for the
/// completely lexsegment ideals of that shape.
///
/// The order is chosen on the normal form and mapped back; when no variable
/// is dropped this is the same as choosing it on `L(u, v)` directly.
pub fn quotient_order(seg: &Lexsegment) -> QuotientOrder {
    let guaranteed = has_linear_resolution(seg).linear;
    let nf = normalize(seg);
    let r = &nf.segment;
    let (reduced, kind) = if !nf.principal && non_complete_shape(r).is_some() {
        (split_order(r), OrderKind::Split)
    } else {
        (prec_order(r), OrderKind::Prec)
    };
    let generators = reduced.iter().map(|w| nf.lift(w)).collect();
    QuotientOrder { generators, kind, guaranteed }
}

/// Closed form for `g(x_s w)` under `≺`: `x_s w / x1` when
/// `x_s w >=lex x1 v`, else `x_s w / x_max(w)`.
///
/// Requires `w ∈ L(u, v)` and `s ∈ set(w)` for the `≺` order; both are
/// checked here against the segment directly.
pub fn g_formula(seg: &Lexsegment, w: &Monomial, s: usize) -> Result<Monomial> {
    if !seg.contains(w) {
        return Err(Error::NotInIdeal(w.to_string()));
    }
    if s >= seg.n() {
        return Err(Error::IndexOutOfRange { index: s + 1, n: seg.n() });
    }
    let xs_w = w.mul_var(s);
    let in_prefix = seg.generators().iter().any(|z| prec(z, w) == Ordering::Less && z.divides(&xs_w));
    if !in_prefix {
        return Err(Error::NotInSet { var: s + 1, generator: w.to_string() });
    }
    Ok(g_branch(seg.v(), w, s))
}

/// The two-branch rule without precondition checks.
pub(crate) fn g_branch(v: &Monomial, w: &Monomial, s: usize) -> Monomial {
    let xs_w = w.mul_var(s);
    let x1_v = v.mul_var(0);
    if lex(&xs_w, &x1_v) != Ordering::Less {
        xs_w.div_var(0).expect("x_s w >=lex x1 v with s > 0 forces x1 | w")
    } else {
        xs_w.div_var(w.max_var().expect("w has positive degree")).expect("max var divides")
    }
}

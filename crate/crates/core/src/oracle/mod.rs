//! Ground truth by explicit linear algebra over the two-element field: hom spaces by solving
//! intertwiner equations, extensions by enumerating cocycles modulo coboundaries, and
//! Krull–Schmidt decomposition by counting homs from indecomposables.
//!
//! Nothing in here consults the combinatorial hom/ext rules; the sweeps at the bottom compare
//! the two.

pub mod f2;
pub mod matrep;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::algebra::{Algebra, ModuleSum, Shape, Uniserial};
use crate::closure::ExtensionClosure;
use crate::error::{Error, Result};
use crate::homext::{extension_middle, hom_dim};
use crate::indecset::IndecSet;
use f2::{EchelonBasis, F2Matrix};
use matrep::{arrow_count, arrow_target, relation_paths};
pub use matrep::{hom_space_dim, MatRep};

pub const DEFAULT_CAP: usize = 12;

/// Largest Ext¹ dimension whose classes are enumerated one by one.
const MAX_EXT_DIM: usize = 16;

/// Per-algebra caches: indecomposables in an order making their hom matrix unitriangular,
/// their companion representations, and that hom matrix.
pub struct Oracle<'a> {
    alg: &'a Algebra,
    order: Vec<Uniserial>,
    reps: Vec<MatRep>,
    gram: Vec<Vec<usize>>,
}

impl<'a> Oracle<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        let mut order = alg.indecomposables();
        // Over a linear quiver a nonzero M[a,b] -> M[c,d] between distinct intervals has
        // c + d < a + b, so sorting by a + b makes the hom matrix lower unitriangular.
        order.sort_by_key(|u| (2 * u.top + u.len, u.top));
        let reps: Vec<MatRep> = order
            .iter()
            .map(|u| MatRep::from_module(alg, &ModuleSum::single(*u)))
            .collect();
        let gram = reps
            .iter()
            .map(|x| reps.iter().map(|y| hom_space_dim(alg, x, y)).collect())
            .collect();
        Oracle {
            alg,
            order,
            reps,
            gram,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn rep(&self, m: &ModuleSum) -> MatRep {
        MatRep::from_module(self.alg, m)
    }

    pub fn hom_dim(&self, x: &ModuleSum, y: &ModuleSum) -> usize {
        hom_space_dim(self.alg, &self.rep(x), &self.rep(y))
    }

    /// Multiplicities from `dim Hom(I, X) = Σ_J m_J dim Hom(I, J)`, solved by forward
    /// substitution and checked against the dimension vector.
    pub fn decompose(&self, x: &MatRep) -> Result<ModuleSum> {
        self.alg.require_linear("decompose")?;
        let mut mult = vec![0i64; self.order.len()];
        for i in 0..self.order.len() {
            let h = hom_space_dim(self.alg, &self.reps[i], x) as i64;
            let known: i64 = (0..i).map(|j| self.gram[i][j] as i64 * mult[j]).sum();
            if self.gram[i][i] != 1 {
                return Err(Error::Oracle(format!(
                    "End({}) is not one-dimensional",
                    self.order[i]
                )));
            }
            mult[i] = h - known;
            if mult[i] < 0 {
                return Err(Error::Oracle(format!(
                    "negative multiplicity for {}",
                    self.order[i]
                )));
            }
        }
        let mut summands = Vec::new();
        for (u, &m) in self.order.iter().zip(&mult) {
            summands.extend(std::iter::repeat_n(*u, m as usize));
        }
        let out = ModuleSum::new(summands);
        if MatRep::from_module(self.alg, &out).dims != x.dims {
            return Err(Error::Oracle(format!(
                "decomposition {out} has the wrong dimension vector"
            )));
        }
        Ok(out)
    }

    /// All middle terms `E` of sequences `0 -> sub -> E -> quot -> 0`, one per Ext¹ class,
    /// the split class included.
    pub fn middle_terms(
        &self,
        quot: &ModuleSum,
        sub: &ModuleSum,
        cap: usize,
    ) -> Result<BTreeSet<ModuleSum>> {
        let total = quot.dimension() + sub.dimension();
        if total > cap {
            return Err(Error::Refused(format!(
                "dimension {total} exceeds the oracle cap {cap}"
            )));
        }
        let (v, u) = (self.rep(quot), self.rep(sub));
        let classes = extension_classes(self.alg, &v, &u)?;
        let mut out = BTreeSet::new();
        for c in classes {
            out.insert(self.decompose(&glue(self.alg, &v, &u, &c))?);
        }
        Ok(out)
    }

    /// `dim Ext¹(quot, sub)` as cocycles modulo coboundaries.
    pub fn ext_dim(&self, quot: &ModuleSum, sub: &ModuleSum) -> usize {
        let (v, u) = (self.rep(quot), self.rep(sub));
        let layout = CocycleLayout::new(self.alg, &v, &u);
        let z = layout.cocycles(self.alg, &v, &u);
        let b = layout.coboundaries(self.alg, &v, &u);
        z.rows() - b.rank()
    }
}

/// Variable layout for the connecting maps `C_a: V_v -> U_w`, one per arrow `a: v -> w`.
struct CocycleLayout {
    offset: Vec<usize>,
    vars: usize,
}

impl CocycleLayout {
    fn new(alg: &Algebra, v: &MatRep, u: &MatRep) -> Self {
        let mut offset = vec![0];
        for a in 0..arrow_count(alg) {
            let size = u.dims[arrow_target(alg, a)] * v.dims[a];
            offset.push(offset[a] + size);
        }
        let vars = *offset.last().unwrap();
        CocycleLayout { offset, vars }
    }

    fn var(&self, v: &MatRep, a: usize, r: usize, c: usize) -> usize {
        self.offset[a] + r * v.dims[a] + c
    }

    /// Solutions of: the off-diagonal block of every relation path in the glued
    /// representation vanishes. That block is `Σ_j U_(after j) C_(a_j) V_(before j)`.
    fn cocycles(&self, alg: &Algebra, v: &MatRep, u: &MatRep) -> F2Matrix {
        if self.vars == 0 {
            return F2Matrix::zeros(0, 1);
        }
        let mut system = F2Matrix::zeros(0, self.vars.max(1));
        for path in relation_paths(alg) {
            let start = path[0];
            let end = arrow_target(alg, *path.last().unwrap());
            let (rows, cols) = (u.dims[end], v.dims[start]);
            let mut eqs = vec![F2Matrix::zeros(1, self.vars.max(1)); rows * cols];
            for (j, &a) in path.iter().enumerate() {
                let before = if j == 0 {
                    F2Matrix::identity(v.dims[start])
                } else {
                    v.path_matrix(&path[..j])
                };
                let after = if j + 1 < path.len() {
                    u.path_matrix(&path[j + 1..])
                } else {
                    F2Matrix::identity(u.dims[end])
                };
                // entry (r, c) of after · C_a · before
                for r in 0..rows {
                    for c in 0..cols {
                        for p in 0..after.cols() {
                            if !after.get(r, p) {
                                continue;
                            }
                            for q in 0..before.rows() {
                                if before.get(q, c) {
                                    eqs[r * cols + c].flip(0, self.var(v, a, p, q));
                                }
                            }
                        }
                    }
                }
            }
            for e in eqs {
                system.push_row(e.row(0));
            }
        }
        system.nullspace()
    }

    /// Images of the elementary `φ_v: V_v -> U_v` under `φ ↦ (U_a φ_v + φ_w V_a)_a`.
    fn coboundaries(&self, alg: &Algebra, v: &MatRep, u: &MatRep) -> F2Matrix {
        let mut out = F2Matrix::zeros(0, self.vars.max(1));
        for vert in 0..alg.n() {
            for r in 0..u.dims[vert] {
                for c in 0..v.dims[vert] {
                    let mut row = F2Matrix::zeros(1, self.vars.max(1));
                    for a in 0..arrow_count(alg) {
                        let w = arrow_target(alg, a);
                        if a == vert {
                            // U_a φ_v: column c of φ has a single 1 in row r.
                            for rr in 0..u.dims[w] {
                                if u.maps[a].get(rr, r) {
                                    row.flip(0, self.var(v, a, rr, c));
                                }
                            }
                        }
                        if w == vert {
                            // φ_w V_a: row r of φ has a single 1 in column c.
                            for cc in 0..v.dims[a] {
                                if v.maps[a].get(c, cc) {
                                    row.flip(0, self.var(v, a, r, cc));
                                }
                            }
                        }
                    }
                    out.push_row(row.row(0));
                }
            }
        }
        out
    }
}

/// One cocycle per Ext¹ class: all sums of a complement of the coboundaries inside the cocycles.
fn extension_classes(alg: &Algebra, v: &MatRep, u: &MatRep) -> Result<Vec<Vec<u64>>> {
    let layout = CocycleLayout::new(alg, v, u);
    let width = layout.vars.max(1).div_ceil(64);
    let z = layout.cocycles(alg, v, u);
    let b = layout.coboundaries(alg, v, u);
    let mut basis = EchelonBasis::new();
    for r in 0..b.rows() {
        basis.insert(b.row(r));
    }
    let mut complement = Vec::new();
    for r in 0..z.rows() {
        if basis.insert(z.row(r)) {
            complement.push(z.row(r).to_vec());
        }
    }
    if complement.len() > MAX_EXT_DIM {
        return Err(Error::Refused(format!(
            "Ext¹ of dimension {} is too large to enumerate",
            complement.len()
        )));
    }
    let mut classes = Vec::with_capacity(1 << complement.len());
    for mask in 0u32..1 << complement.len() {
        let mut c = vec![0u64; width];
        for (k, vec) in complement.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for (x, y) in c.iter_mut().zip(vec) {
                    *x ^= y;
                }
            }
        }
        classes.push(c);
    }
    Ok(classes)
}

/// The representation with `E_v = U_v ⊕ V_v` and `E_a = [[U_a, C_a], [0, V_a]]`.
fn glue(alg: &Algebra, v: &MatRep, u: &MatRep, cocycle: &[u64]) -> MatRep {
    let layout = CocycleLayout::new(alg, v, u);
    let dims: Vec<usize> = (0..alg.n()).map(|x| u.dims[x] + v.dims[x]).collect();
    let bit = |k: usize| cocycle[k / 64] >> (k % 64) & 1 == 1;
    let maps = (0..arrow_count(alg))
        .map(|a| {
            let w = arrow_target(alg, a);
            let mut m = F2Matrix::zeros(dims[w], dims[a]);
            for r in 0..u.dims[w] {
                for c in 0..u.dims[a] {
                    m.set(r, c, u.maps[a].get(r, c));
                }
                for c in 0..v.dims[a] {
                    m.set(r, u.dims[a] + c, bit(layout.var(v, a, r, c)));
                }
            }
            for r in 0..v.dims[w] {
                for c in 0..v.dims[a] {
                    m.set(u.dims[w] + r, u.dims[a] + c, v.maps[a].get(r, c));
                }
            }
            m
        })
        .collect();
    MatRep { dims, maps }
}

/// Multisets over `items` with multiplicity at most `bound` and total dimension at most `cap`,
/// the zero module excluded.
pub fn bounded_multisets(items: &[Uniserial], bound: usize, cap: usize) -> Vec<ModuleSum> {
    fn go(
        items: &[Uniserial],
        bound: usize,
        cap: usize,
        cur: &mut Vec<Uniserial>,
        out: &mut Vec<ModuleSum>,
    ) {
        let Some((first, rest)) = items.split_first() else {
            if !cur.is_empty() {
                out.push(ModuleSum::new(cur.clone()));
            }
            return;
        };
        for k in 0..=bound {
            if k * first.len > cap {
                break;
            }
            for _ in 0..k {
                cur.push(*first);
            }
            go(rest, bound, cap - k * first.len, cur, out);
            for _ in 0..k {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(items, bound, cap, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `hom_space_dim` against `hom_dim` on every pair of indecomposables.
pub fn check_hom(alg: &Algebra) -> CheckOutcome {
    let indec = alg.indecomposables();
    let reps: Vec<MatRep> = indec
        .iter()
        .map(|u| MatRep::from_module(alg, &ModuleSum::single(*u)))
        .collect();
    let mut out = CheckOutcome {
        name: "hom dimensions".into(),
        ..Default::default()
    };
    for (x, rx) in indec.iter().zip(&reps) {
        for (y, ry) in indec.iter().zip(&reps) {
            out.cases += 1;
            let (o, c) = (hom_space_dim(alg, rx, ry), hom_dim(alg, x, y));
            if o != c {
                out.failures
                    .push(format!("Hom({x}, {y}): oracle {o}, rule {c}"));
            }
        }
    }
    out
}

/// `decompose ∘ to_matrep` is the identity on modules with multiplicities at most `bound`.
pub fn check_round_trip(oracle: &Oracle<'_>, bound: usize, cap: usize) -> CheckOutcome {
    let items = oracle.algebra().indecomposables();
    let modules = bounded_multisets(&items, bound, cap);
    let failures: Vec<String> = modules
        .par_iter()
        .filter_map(|m| match oracle.decompose(&oracle.rep(m)) {
            Ok(d) if d == *m => None,
            Ok(d) => Some(format!("{m} decomposed as {d}")),
            Err(e) => Some(format!("{m}: {e}")),
        })
        .collect();
    CheckOutcome {
        name: "decomposition round trip".into(),
        cases: modules.len(),
        failures,
    }
}

/// Middle terms of single pairs of indecomposables against `ext1_nonzero` and `extension_middle`.
pub fn check_pairs(oracle: &Oracle<'_>, cap: usize) -> Result<CheckOutcome> {
    let alg = oracle.algebra();
    let indec = alg.indecomposables();
    let mut out = CheckOutcome {
        name: "extensions of indecomposables".into(),
        ..Default::default()
    };
    for quot in &indec {
        for sub in &indec {
            out.cases += 1;
            let (q, s) = (ModuleSum::single(*quot), ModuleSum::single(*sub));
            let found = oracle.middle_terms(&q, &s, cap)?;
            let mut want = BTreeSet::from([q.direct_sum(&s)]);
            if let Some(m) = extension_middle(alg, quot, sub)? {
                want.insert(m);
            }
            if found != want {
                let show = |s: &BTreeSet<ModuleSum>| {
                    s.iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                out.failures.push(format!(
                    "0 -> {sub} -> ? -> {quot} -> 0: oracle [{}], rule [{}]",
                    show(&found),
                    show(&want)
                ));
            }
        }
    }
    Ok(out)
}

/// Summands of all oracle middle terms for pairs `(quot, sub)` of modules built from
/// indecomposables with multiplicity at most `bound` and joint dimension at most `cap`.
///
/// A summand of `sub` that no summand of `quot` extends nontrivially splits off every
/// extension (and symmetrically), so only pairs in which every summand takes part in some
/// nonzero Ext¹ need the cocycle machinery. The map is keyed by the pair of summand sets.
pub fn middle_summands(
    oracle: &Oracle<'_>,
    bound: usize,
    cap: usize,
) -> Result<BTreeMap<(IndecSet, IndecSet), IndecSet>> {
    let alg = oracle.algebra();
    let indec = alg.indecomposables();
    let count = indec.len();
    let mut ext = vec![false; count * count];
    for (q, quot) in indec.iter().enumerate() {
        for (s, sub) in indec.iter().enumerate() {
            ext[q * count + s] =
                oracle.ext_dim(&ModuleSum::single(*quot), &ModuleSum::single(*sub)) > 0;
        }
    }
    let modules = bounded_multisets(&indec, bound, cap);
    let supports: Vec<IndecSet> = modules
        .iter()
        .map(|m| IndecSet::from_module(alg, m))
        .collect::<Result<_>>()?;
    let connected = |qs: IndecSet, ss: IndecSet| {
        qs.iter().all(|q| ss.iter().any(|s| ext[q * count + s]))
            && ss.iter().all(|s| qs.iter().any(|q| ext[q * count + s]))
    };
    let mut jobs = Vec::new();
    for (qi, q) in modules.iter().enumerate() {
        for (si, s) in modules.iter().enumerate() {
            if q.dimension() + s.dimension() <= cap && connected(supports[qi], supports[si]) {
                jobs.push((qi, si));
            }
        }
    }
    let results: Vec<((IndecSet, IndecSet), Result<IndecSet>)> = jobs
        .par_iter()
        .map(|&(qi, si)| {
            let found = oracle
                .middle_terms(&modules[qi], &modules[si], cap)
                .and_then(|mids| {
                    let mut acc = IndecSet::EMPTY;
                    for m in &mids {
                        acc = acc.union(IndecSet::from_module(alg, m)?);
                    }
                    Ok(acc)
                });
            ((supports[qi], supports[si]), found)
        })
        .collect();
    let mut out: BTreeMap<(IndecSet, IndecSet), IndecSet> = BTreeMap::new();
    for (key, found) in results {
        let found = found?;
        let slot = out.entry(key).or_default();
        *slot = slot.union(found);
    }
    Ok(out)
}

/// Every oracle middle-term summand for a pair of supports lies in the extension product of
/// those supports, and every product of single indecomposables and every multi-summand
/// generator is realized by the oracle.
/// Together these give equality of the oracle's product and [`ExtensionClosure::star`] on
/// every pair of subcategories.
pub fn check_star(oracle: &Oracle<'_>, bound: usize, cap: usize) -> Result<CheckOutcome> {
    let alg = oracle.algebra();
    let closure = ExtensionClosure::new(alg)?;
    let table = middle_summands(oracle, bound, cap)?;
    let mut out = CheckOutcome {
        name: format!("extension products, multiplicity <= {bound}"),
        ..Default::default()
    };
    for (&(quot, sub), &found) in &table {
        out.cases += 1;
        let star = closure.star(sub, quot);
        let extra = found.difference(star);
        if !extra.is_empty() {
            out.failures.push(format!(
                "quotients {} over submodules {}: oracle summands {} outside the product",
                quot.to_module(alg),
                sub.to_module(alg),
                extra.to_module(alg)
            ));
        }
    }
    for q in 0..closure.count() {
        for s in 0..closure.count() {
            let (qs, ss) = (IndecSet::singleton(q), IndecSet::singleton(s));
            let star = closure.star(ss, qs);
            let found = table
                .get(&(qs, ss))
                .copied()
                .unwrap_or_default()
                .union(qs)
                .union(ss);
            if !star.is_subset(found) {
                out.failures.push(format!(
                    "product of {} over {} not realized by the oracle",
                    alg.indecomposable(q),
                    alg.indecomposable(s)
                ));
            }
        }
    }
    for (&target, keys) in &closure.sum_generators().by_target {
        for &(ss, qs) in keys {
            out.cases += 1;
            if !oracle_star(&table, ss, qs).contains(target) {
                out.failures.push(format!(
                    "{} from quotients {} over submodules {} not realized by the oracle",
                    alg.indecomposable(target),
                    qs.to_module(alg),
                    ss.to_module(alg)
                ));
            }
        }
    }
    Ok(out)
}

/// The extension product `sub • quot` as seen by the oracle table.
pub fn oracle_star(
    table: &BTreeMap<(IndecSet, IndecSet), IndecSet>,
    sub: IndecSet,
    quot: IndecSet,
) -> IndecSet {
    let mut out = sub.union(quot);
    for (&(q, s), &found) in table {
        if q.is_subset(quot) && s.is_subset(sub) {
            out = out.union(found);
        }
    }
    out
}

/// All checks an `oracle verify` run performs for one algebra.
pub fn verify_algebra(alg: &Algebra, cap: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = vec![check_hom(alg)];
    if alg.shape() == Shape::Linear {
        let oracle = Oracle::new(alg);
        out.push(check_round_trip(&oracle, 2, cap));
        out.push(check_pairs(&oracle, cap)?);
        out.push(check_star(&oracle, 2, cap)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor;

    fn m(s: &str) -> ModuleSum {
        s.parse().unwrap()
    }

    #[test]
    fn simple_extensions() {
        let a2 = Algebra::linear(2).unwrap();
        let o = Oracle::new(&a2);
        let got = o.middle_terms(&m("1-1"), &m("2-1"), DEFAULT_CAP).unwrap();
        assert_eq!(got, BTreeSet::from([m("1-1+2-1"), m("1-2")]));
        let a3 = Algebra::linear(3).unwrap();
        let o = Oracle::new(&a3);
        assert_eq!(
            o.middle_terms(&m("1-1"), &m("3-1"), DEFAULT_CAP).unwrap(),
            BTreeSet::from([m("1-1+3-1")])
        );
    }

    #[test]
    fn glued_projective() {
        let a4 = Algebra::linear(4).unwrap();
        let o = Oracle::new(&a4);
        let got = o.middle_terms(&m("1-2"), &m("3-2"), DEFAULT_CAP).unwrap();
        assert!(got.contains(&m("1-4")));
    }

    #[test]
    fn relation_kills_long_glue() {
        let ab = Algebra::new(AlgebraDescriptor::linear_with_relation(3, 1, 2)).unwrap();
        let o = Oracle::new(&ab);
        assert_eq!(o.ext_dim(&m("1-1"), &m("2-2")), 0);
        assert_eq!(o.ext_dim(&m("1-1"), &m("2-1")), 1);
    }

    #[test]
    fn decompose_round_trip() {
        let a = Algebra::linear(3).unwrap();
        let o = Oracle::new(&a);
        assert!(check_round_trip(&o, 2, DEFAULT_CAP).passed());
        let cyc = Algebra::new(AlgebraDescriptor::cyclic(2, 1, 3)).unwrap();
        assert!(Oracle::new(&cyc).decompose(&MatRep::zero(&cyc)).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let a = Algebra::linear(4).unwrap();
        let o = Oracle::new(&a);
        assert!(o
            .middle_terms(&m("1-4+1-4"), &m("1-4+2-3"), DEFAULT_CAP)
            .is_err());
    }

    #[test]
    fn cyclic_ext_can_exceed_one() {
        let cyc = Algebra::new(AlgebraDescriptor::cyclic(1, 1, 4)).unwrap();
        let o = Oracle::new(&cyc);
        // k[x]/x^4: Ext¹(k[x]/x^2, k[x]/x^2) is two-dimensional.
        assert_eq!(o.ext_dim(&m("1-2"), &m("1-2")), 2);
    }

    #[test]
    fn multisets() {
        let items = [Uniserial::new(1, 1), Uniserial::new(1, 2)];
        let all = bounded_multisets(&items, 2, 12);
        assert_eq!(all.len(), 8);
        assert_eq!(bounded_multisets(&items, 2, 2).len(), 3);
    }
}

//! Middle terms of extensions between direct sums of intervals, computed without matrices of
//! module elements.
//!
//! An extension class of `V = ⊕ V_l` by `U = ⊕ U_k` is a 0/1 matrix `ξ` on the pairs with
//! `Ext¹(V_l, U_k) ≠ 0`. For every indecomposable `I` the long exact sequence gives
//! `dim Hom(I, E) = dim Hom(I, U) + dim Hom(I, V) − rank δ_I`, where the connecting map
//! `δ_I: Hom(I, V) -> Ext¹(I, U)` pulls `ξ` back along the canonical maps `I -> V_l`.
//! Hom counts then determine `E` by unitriangular elimination.
//!
//! Sums matter: `0 -> M[2,4] ⊕ M[3,3] -> M[1,4] ⊕ M[2,3] -> M[1,2] -> 0` over `A_4` has a
//! middle-term summand that no single pair of summands produces.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{Algebra, ModuleSum, Uniserial};
use crate::error::Result;
use crate::homext::{ext1_nonzero, extension_middle, hom_dim};
use crate::indecset::IndecSet;

/// Limits on the extension configurations searched for summands beyond single pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigBound {
    /// Total number of summands of `U` and `V` together.
    pub summands: usize,
    /// Copies of one indecomposable on one side.
    pub multiplicity: usize,
}

impl Default for ConfigBound {
    fn default() -> Self {
        ConfigBound {
            summands: 4,
            multiplicity: 2,
        }
    }
}

/// Whether pulling the non-split class in `Ext¹(v, u)` back along the canonical `i -> v`
/// stays non-split. With `i = M[a,b]` and `u = M[s,t]` this holds iff `a < s` and `b < t`:
/// otherwise `i -> v` lifts through one of the two summands of the middle term.
pub fn pullback_nonzero(alg: &Algebra, i: &Uniserial, v: &Uniserial, u: &Uniserial) -> bool {
    let (a, b) = i.bounds();
    let (s, t) = u.bounds();
    hom_dim(alg, i, v) == 1 && ext1_nonzero(alg, v, u).unwrap_or(false) && a < s && b < t
}

/// Precomputed combinatorial data for one linear algebra.
#[derive(Debug, Clone)]
pub struct ProductEngine {
    indec: Vec<Uniserial>,
    /// Indecomposables sorted so the hom matrix is lower unitriangular.
    order: Vec<usize>,
    hom: Vec<Vec<bool>>,
    ext: Vec<Vec<bool>>,
    /// `pull[i][v][u]`
    pull: Vec<Vec<Vec<bool>>>,
}

impl ProductEngine {
    pub fn new(alg: &Algebra) -> Result<Self> {
        alg.require_linear("extension products")?;
        let indec = alg.indecomposables();
        let n = indec.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| (2 * indec[k].top + indec[k].len, indec[k].top));
        let hom = indec
            .iter()
            .map(|x| indec.iter().map(|y| hom_dim(alg, x, y) == 1).collect())
            .collect();
        let ext = indec
            .iter()
            .map(|v| {
                indec
                    .iter()
                    .map(|u| ext1_nonzero(alg, v, u).unwrap_or(false))
                    .collect()
            })
            .collect();
        let pull = indec
            .iter()
            .map(|i| {
                indec
                    .iter()
                    .map(|v| {
                        indec
                            .iter()
                            .map(|u| pullback_nonzero(alg, i, v, u))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(ProductEngine {
            indec,
            order,
            hom,
            ext,
            pull,
        })
    }

    pub fn count(&self) -> usize {
        self.indec.len()
    }

    pub fn ext(&self, quot: usize, sub: usize) -> bool {
        self.ext[quot][sub]
    }

    /// Multiplicities of the middle term of the class `xi[l][k]` (`l` over `quots`, `k` over `subs`).
    pub fn middle(&self, subs: &[usize], quots: &[usize], xi: &[Vec<bool>]) -> Vec<usize> {
        let n = self.indec.len();
        let h: Vec<i64> = (0..n)
            .map(|i| {
                let base = subs.iter().filter(|&&k| self.hom[i][k]).count()
                    + quots.iter().filter(|&&l| self.hom[i][l]).count();
                // Rows of δ_I indexed by quotient summands receiving a map from I, columns by subs.
                let mut rows: Vec<u64> = Vec::new();
                for (l, &vq) in quots.iter().enumerate() {
                    if !self.hom[i][vq] {
                        continue;
                    }
                    let mut row = 0u64;
                    for (k, &us) in subs.iter().enumerate() {
                        if xi[l][k] && self.pull[i][vq][us] {
                            row |= 1 << k;
                        }
                    }
                    rows.push(row);
                }
                (base - f2_rank(&mut rows)) as i64
            })
            .collect();
        let mut mult = vec![0usize; n];
        for (pos, &i) in self.order.iter().enumerate() {
            let known: i64 = self.order[..pos]
                .iter()
                .filter(|&&j| self.hom[i][j])
                .map(|&j| mult[j] as i64)
                .sum();
            let m = h[i] - known;
            assert!(m >= 0, "negative multiplicity in a middle term");
            mult[i] = m as usize;
        }
        mult
    }

    /// Summands of the non-split middle term for a single pair.
    fn pair_middle(&self, alg: &Algebra, quot: usize, sub: usize) -> Result<IndecSet> {
        match extension_middle(alg, &self.indec[quot], &self.indec[sub])? {
            Some(m) => IndecSet::from_module(alg, &m),
            None => Ok(IndecSet::EMPTY),
        }
    }
}

fn f2_rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// For every indecomposable that only arises from sums, the minimal pairs
/// `(submodule support, quotient support)` producing it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SumGenerators {
    pub by_target: BTreeMap<usize, Vec<(IndecSet, IndecSet)>>,
}

impl SumGenerators {
    fn record(&mut self, target: usize, key: (IndecSet, IndecSet)) {
        let list = self.by_target.entry(target).or_default();
        if list
            .iter()
            .any(|&(s, q)| s.is_subset(key.0) && q.is_subset(key.1))
        {
            return;
        }
        list.retain(|&(s, q)| !(key.0.is_subset(s) && key.1.is_subset(q)));
        list.push(key);
        list.sort_unstable();
    }

    pub fn merge(&mut self, other: &SumGenerators) {
        for (&t, keys) in &other.by_target {
            for &k in keys {
                self.record(t, k);
            }
        }
    }

    /// The extra indecomposables of `sub • quot` beyond those of single pairs.
    pub fn extras(&self, sub: IndecSet, quot: IndecSet) -> IndecSet {
        let mut out = IndecSet::EMPTY;
        for (&t, keys) in &self.by_target {
            if keys
                .iter()
                .any(|&(s, q)| s.is_subset(sub) && q.is_subset(quot))
            {
                out.insert(t);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.by_target.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_target.is_empty()
    }
}

/// Multisets (as sorted index lists) over `0..count` with at most `bound` copies of each
/// element and between 1 and `max_len` elements.
fn multisets(count: usize, bound: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(
        next: usize,
        count: usize,
        bound: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for k in next..count {
            let copies = cur.iter().rev().take_while(|&&x| x == k).count();
            if copies >= bound {
                continue;
            }
            cur.push(k);
            go(k, count, bound, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, count, bound, max_len, &mut Vec::new(), &mut out);
    out
}

fn support(items: &[usize]) -> IndecSet {
    let mut s = IndecSet::EMPTY;
    for &k in items {
        s.insert(k);
    }
    s
}

/// Enumerates connected extension configurations with at least one side holding two or
/// more summands, and records every middle-term summand not already produced by single pairs
/// drawn from the same supports.
pub fn sum_generators(
    alg: &Algebra,
    engine: &ProductEngine,
    bound: ConfigBound,
) -> Result<SumGenerators> {
    let count = engine.count();
    let mut pair_mid = vec![IndecSet::EMPTY; count * count];
    for q in 0..count {
        for s in 0..count {
            pair_mid[q * count + s] = engine.pair_middle(alg, q, s)?;
        }
    }
    let pairwise = |subs: IndecSet, quots: IndecSet| {
        let mut out = subs.union(quots);
        for q in quots.iter() {
            for s in subs.iter() {
                out = out.union(pair_mid[q * count + s]);
            }
        }
        out
    };
    let sides = multisets(count, bound.multiplicity, bound.summands.saturating_sub(1));
    let results: Vec<SumGenerators> = sides
        .par_iter()
        .map(|subs| {
            let mut found = SumGenerators::default();
            let reachable: Vec<usize> = (0..count)
                .filter(|&q| subs.iter().any(|&s| engine.ext(q, s)))
                .collect();
            let quot_sides = multisets(
                reachable.len(),
                bound.multiplicity,
                bound.summands - subs.len(),
            );
            for qpos in quot_sides {
                if subs.len() + qpos.len() < 3 {
                    continue;
                }
                let quots: Vec<usize> = qpos.iter().map(|&p| reachable[p]).collect();
                search_classes(engine, subs, &quots, &pairwise, &mut found);
            }
            found
        })
        .collect();
    let mut out = SumGenerators::default();
    for r in &results {
        out.merge(r);
    }
    Ok(out)
}

fn search_classes(
    engine: &ProductEngine,
    subs: &[usize],
    quots: &[usize],
    pairwise: &impl Fn(IndecSet, IndecSet) -> IndecSet,
    found: &mut SumGenerators,
) {
    let slots: Vec<(usize, usize)> = (0..quots.len())
        .flat_map(|l| (0..subs.len()).map(move |k| (l, k)))
        .filter(|&(l, k)| engine.ext(quots[l], subs[k]))
        .collect();
    if slots.len() > 20 {
        return;
    }
    let (ssup, qsup) = (support(subs), support(quots));
    let known = pairwise(ssup, qsup);
    for mask in 1u32..1 << slots.len() {
        let mut xi = vec![vec![false; subs.len()]; quots.len()];
        for (b, &(l, k)) in slots.iter().enumerate() {
            if mask >> b & 1 == 1 {
                xi[l][k] = true;
            }
        }
        if !connected(&xi) {
            continue;
        }
        let mult = engine.middle(subs, quots, &xi);
        for (t, &m) in mult.iter().enumerate() {
            if m > 0 && !known.contains(t) {
                found.record(t, (ssup, qsup));
            }
        }
    }
}

/// Every row and column is used and the bipartite graph of nonzero entries is connected.
fn connected(xi: &[Vec<bool>]) -> bool {
    let (rows, cols) = (xi.len(), xi[0].len());
    let mut seen_rows = vec![false; rows];
    let mut seen_cols = vec![false; cols];
    let mut stack = vec![(true, 0usize)];
    seen_rows[0] = true;
    while let Some((is_row, k)) = stack.pop() {
        if is_row {
            for c in 0..cols {
                if xi[k][c] && !seen_cols[c] {
                    seen_cols[c] = true;
                    stack.push((false, c));
                }
            }
        } else {
            for r in 0..rows {
                if xi[r][k] && !seen_rows[r] {
                    seen_rows[r] = true;
                    stack.push((true, r));
                }
            }
        }
    }
    seen_rows.iter().all(|&x| x) && seen_cols.iter().all(|&x| x)
}

/// Middle term of an explicit class, as a module.
pub fn middle_module(
    alg: &Algebra,
    engine: &ProductEngine,
    subs: &[Uniserial],
    quots: &[Uniserial],
    xi: &[Vec<bool>],
) -> Result<ModuleSum> {
    let idx = |u: &Uniserial| alg.index_of(u).ok_or(crate::error::Error::NotAModule(*u));
    let s: Vec<usize> = subs.iter().map(idx).collect::<Result<_>>()?;
    let q: Vec<usize> = quots.iter().map(idx).collect::<Result<_>>()?;
    let mult = engine.middle(&s, &q, xi);
    let mut out = Vec::new();
    for (k, &m) in mult.iter().enumerate() {
        out.extend(std::iter::repeat_n(alg.indecomposable(k), m));
    }
    Ok(ModuleSum::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(i: usize, j: usize) -> Uniserial {
        Uniserial::interval(i, j)
    }

    #[test]
    fn pair_classes_reproduce_the_pair_rule() {
        let a = Algebra::linear(4).unwrap();
        let e = ProductEngine::new(&a).unwrap();
        for v in a.indecomposables() {
            for u in a.indecomposables() {
                let split = middle_module(&a, &e, &[u], &[v], &[vec![false]]).unwrap();
                assert_eq!(split, ModuleSum::new(vec![u, v]));
                if let Some(m) = extension_middle(&a, &v, &u).unwrap() {
                    assert_eq!(middle_module(&a, &e, &[u], &[v], &[vec![true]]).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn two_submodules_one_quotient() {
        let a = Algebra::linear(4).unwrap();
        let e = ProductEngine::new(&a).unwrap();
        let mid = middle_module(
            &a,
            &e,
            &[iv(2, 4), iv(3, 3)],
            &[iv(1, 2)],
            &[vec![true, true]],
        )
        .unwrap();
        assert_eq!(mid, ModuleSum::new(vec![iv(1, 4), iv(2, 3)]));
        let gens = sum_generators(&a, &e, ConfigBound::default()).unwrap();
        let l = IndecSet::from_uniserials(&a, &[iv(2, 4), iv(3, 3)]).unwrap();
        let r = IndecSet::from_uniserials(&a, &[iv(1, 2)]).unwrap();
        assert!(gens.extras(l, r).contains(a.index_of(&iv(2, 3)).unwrap()));
    }

    #[test]
    fn multiset_enumeration() {
        assert_eq!(
            multisets(2, 2, 2),
            vec![vec![0], vec![0, 0], vec![0, 1], vec![1], vec![1, 1]]
        );
        assert_eq!(multisets(3, 1, 3).len(), 7);
    }

    #[test]
    fn rank_over_f2() {
        assert_eq!(f2_rank(&mut [0b11, 0b01, 0b10]), 2);
        assert_eq!(f2_rank(&mut []), 0);
        assert_eq!(f2_rank(&mut [0, 0]), 0);
    }
}

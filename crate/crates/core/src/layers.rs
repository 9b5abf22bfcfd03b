//! Torsion pairs cut out by sets of simples, the torsion radical, radical layer length,
//! and projective/injective dimension by syzygy orbits.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::{Algebra, ModuleSum, Uniserial};
use crate::error::{Error, Result};
use crate::indecset::IndecSet;

/// A set `S` of simple modules, given by vertex. Torsion modules are those whose top avoids `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorsionSpec {
    n: usize,
    simples: BTreeSet<usize>,
}

impl TorsionSpec {
    pub fn new(alg: &Algebra, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut simples = BTreeSet::new();
        for v in vertices {
            alg.check_vertex(v)?;
            simples.insert(v);
        }
        Ok(TorsionSpec {
            n: alg.n(),
            simples,
        })
    }

    pub fn empty(alg: &Algebra) -> Self {
        TorsionSpec {
            n: alg.n(),
            simples: BTreeSet::new(),
        }
    }

    /// Every subset of `{1..n}`, ordered by bitmask.
    pub fn all_subsets(alg: &Algebra) -> Vec<Self> {
        let n = alg.n();
        (0u64..1 << n)
            .map(|mask| TorsionSpec {
                n,
                simples: (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect(),
            })
            .collect()
    }

    pub fn simples(&self) -> &BTreeSet<usize> {
        &self.simples
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.simples.contains(&vertex)
    }

    /// The complementary vertices `S'`.
    pub fn complement(&self) -> BTreeSet<usize> {
        (1..=self.n).filter(|v| !self.simples.contains(v)).collect()
    }
}

/// The largest submodule of `u` whose top is outside `S`, as the number of composition factors
/// dropped from the top (`u.len` when there is none).
fn torsion_offset(alg: &Algebra, spec: &TorsionSpec, u: &Uniserial) -> usize {
    (0..u.len)
        .find(|&r| {
            !spec.contains(
                alg.vertex_after(u.top, r)
                    .expect("factor inside the quiver"),
            )
        })
        .unwrap_or(u.len)
}

/// `t_S(M)`, computed summand by summand.
pub fn torsion_radical(alg: &Algebra, spec: &TorsionSpec, m: &ModuleSum) -> ModuleSum {
    m.summands()
        .iter()
        .filter_map(|u| {
            let r = torsion_offset(alg, spec, u);
            (r < u.len).then(|| Uniserial::new(alg.vertex_after(u.top, r).unwrap(), u.len - r))
        })
        .collect()
}

/// `M / t_S(M)`.
pub fn torsion_quotient(alg: &Algebra, spec: &TorsionSpec, m: &ModuleSum) -> ModuleSum {
    m.summands()
        .iter()
        .filter_map(|u| {
            let r = torsion_offset(alg, spec, u);
            (r > 0).then_some(Uniserial::new(u.top, r))
        })
        .collect()
}

/// One application of `F = rad ∘ t_S`.
pub fn layer_step(alg: &Algebra, spec: &TorsionSpec, m: &ModuleSum) -> ModuleSum {
    alg.radical(&torsion_radical(alg, spec, m))
}

/// Least `i` with `t_S(F^i(M)) = 0`.
pub fn radical_layer_length(alg: &Algebra, spec: &TorsionSpec, m: &ModuleSum) -> usize {
    let mut cur = m.clone();
    let mut i = 0;
    loop {
        let t = torsion_radical(alg, spec, &cur);
        if t.is_zero() {
            return i;
        }
        cur = alg.radical(&t);
        i += 1;
    }
}

/// Radical layer length of the regular module, the maximum over the projectives.
pub fn algebra_llts(alg: &Algebra, spec: &TorsionSpec) -> usize {
    radical_layer_length(alg, spec, &alg.regular_module())
}

/// `{ ⌈L/d⌉ − 1 : 1 <= d < L }`.
pub fn layer_generation_times(l: usize) -> BTreeSet<usize> {
    (1..l).map(|d| l.div_ceil(d) - 1).collect()
}

/// The indecomposables with radical layer length at most `d`.
pub fn wd_generator(alg: &Algebra, spec: &TorsionSpec, d: usize) -> Result<IndecSet> {
    let top = algebra_llts(alg, spec);
    if d == 0 || d >= top {
        return Err(Error::OutOfRange(format!(
            "layer bound {d} must lie in 1..{top}"
        )));
    }
    let members: Vec<Uniserial> = alg
        .indecomposables()
        .into_iter()
        .filter(|u| radical_layer_length(alg, spec, &ModuleSum::single(*u)) <= d)
        .collect();
    IndecSet::from_uniserials(alg, &members)
}

/// `Ω(u)`, or `None` when `u` is projective.
pub fn syzygy(alg: &Algebra, u: &Uniserial) -> Option<Uniserial> {
    let c = alg.c(u.top);
    (u.len < c).then(|| Uniserial::new(alg.vertex_after(u.top, u.len).unwrap(), c - u.len))
}

/// `Ω⁻¹(u)`, or `None` when `u` is injective.
pub fn cosyzygy(alg: &Algebra, u: &Uniserial) -> Option<Uniserial> {
    let inj = alg
        .injective(alg.socle_vertex(u))
        .expect("socle vertex is valid");
    (inj.len > u.len).then(|| Uniserial::new(inj.top, inj.len - u.len))
}

fn orbit_length(u: &Uniserial, next: impl Fn(&Uniserial) -> Option<Uniserial>) -> Option<usize> {
    let mut seen = HashSet::new();
    let mut cur = *u;
    let mut steps = 0;
    loop {
        match next(&cur) {
            None => return Some(steps),
            Some(v) => {
                if !seen.insert(cur) {
                    return None;
                }
                cur = v;
                steps += 1;
            }
        }
    }
}

fn max_over(m: &ModuleSum, f: impl Fn(&Uniserial) -> Option<usize>) -> Option<usize> {
    m.summands()
        .iter()
        .try_fold(0, |acc, u| f(u).map(|d| acc.max(d)))
}

/// Projective dimension; `None` is infinite. The zero module has dimension 0 here.
pub fn projective_dimension(alg: &Algebra, m: &ModuleSum) -> Option<usize> {
    max_over(m, |u| orbit_length(u, |v| syzygy(alg, v)))
}

/// Injective dimension; `None` is infinite.
pub fn injective_dimension(alg: &Algebra, m: &ModuleSum) -> Option<usize> {
    max_over(m, |u| orbit_length(u, |v| cosyzygy(alg, v)))
}

/// Global dimension as the largest projective dimension of a simple.
pub fn global_dimension(alg: &Algebra) -> Option<usize> {
    projective_dimension(alg, &alg.simples_module())
}

/// `S` = the simples of finite projective dimension; with it the layer length is `ℓℓ^∞`.
pub fn finite_pd_simples(alg: &Algebra) -> TorsionSpec {
    let vertices = (1..=alg.n())
        .filter(|&i| projective_dimension(alg, &ModuleSum::single(Uniserial::new(i, 1))).is_some());
    TorsionSpec::new(alg, vertices).expect("vertices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor;

    fn cyclic_fixture() -> Algebra {
        Algebra::new(AlgebraDescriptor::cyclic(4, 1, 20)).unwrap()
    }

    fn spec(alg: &Algebra, v: &[usize]) -> TorsionSpec {
        TorsionSpec::new(alg, v.iter().copied()).unwrap()
    }

    #[test]
    fn torsion_radical_examples() {
        let a = cyclic_fixture();
        let m = ModuleSum::single(Uniserial::new(1, 20));
        assert_eq!(
            torsion_radical(&a, &spec(&a, &[1]), &m),
            ModuleSum::single(Uniserial::new(2, 19))
        );
        assert_eq!(
            torsion_quotient(&a, &spec(&a, &[1]), &m),
            ModuleSum::single(Uniserial::new(1, 1))
        );
        assert_eq!(
            torsion_radical(&a, &TorsionSpec::empty(&a), &a.regular_module()),
            a.regular_module()
        );
        let all = spec(&a, &[1, 2, 3, 4]);
        assert!(torsion_radical(&a, &all, &a.regular_module()).is_zero());
    }

    #[test]
    fn cyclic_layer_lengths() {
        let a = cyclic_fixture();
        let cases: [(&[usize], usize); 7] = [
            (&[], 23),
            (&[1], 18),
            (&[2], 17),
            (&[1, 2], 12),
            (&[2, 3], 11),
            (&[1, 2, 3], 6),
            (&[2, 3, 4], 5),
        ];
        for (s, want) in cases {
            assert_eq!(algebra_llts(&a, &spec(&a, s)), want, "S={s:?}");
        }
    }

    #[test]
    fn linear_layer_lengths() {
        for n in 2..=7 {
            let a = Algebra::linear(n).unwrap();
            for j in 1..n {
                let s: Vec<usize> = (1..=j).collect();
                assert_eq!(algebra_llts(&a, &spec(&a, &s)), n - j);
            }
        }
    }

    #[test]
    fn empty_spec_is_loewy_length() {
        let a = Algebra::linear(5).unwrap();
        for u in a.indecomposables() {
            let m = ModuleSum::single(u);
            assert_eq!(
                radical_layer_length(&a, &TorsionSpec::empty(&a), &m),
                m.loewy_length()
            );
        }
    }

    #[test]
    fn spectrum_formula() {
        assert_eq!(
            layer_generation_times(23),
            BTreeSet::from([1, 2, 3, 4, 5, 7, 11, 22])
        );
        assert_eq!(
            layer_generation_times(18),
            BTreeSet::from([1, 2, 3, 4, 5, 8, 17])
        );
        assert!(layer_generation_times(1).is_empty());
    }

    #[test]
    fn wd_generators() {
        let a = Algebra::linear(4).unwrap();
        let got = wd_generator(&a, &spec(&a, &[1]), 1).unwrap();
        let want: Vec<Uniserial> = a
            .indecomposables()
            .into_iter()
            .filter(|u| u.len == 1 || (u.top == 1 && u.len == 2))
            .collect();
        assert_eq!(got, IndecSet::from_uniserials(&a, &want).unwrap());
        assert!(wd_generator(&a, &spec(&a, &[1]), 3).is_err());
        assert!(wd_generator(&a, &spec(&a, &[1]), 0).is_err());
    }

    #[test]
    fn projective_dimensions() {
        let ab = Algebra::new(AlgebraDescriptor::linear_with_relation(3, 1, 2)).unwrap();
        let pd = |i| projective_dimension(&ab, &ModuleSum::single(Uniserial::new(i, 1)));
        assert_eq!((pd(1), pd(2), pd(3)), (Some(2), Some(1), Some(0)));
        assert_eq!(global_dimension(&ab), Some(2));
        assert_eq!(finite_pd_simples(&ab).simples().len(), 3);

        let cyc = cyclic_fixture();
        // Ω S(1) = M(2,19), then M(1,4) and M(1,16) alternate forever; the other simples
        // have projective radicals.
        let pd = |i| projective_dimension(&cyc, &ModuleSum::single(Uniserial::new(i, 1)));
        assert_eq!(
            [pd(1), pd(2), pd(3), pd(4)],
            [None, Some(1), Some(1), Some(1)]
        );
        assert_eq!(finite_pd_simples(&cyc), spec(&cyc, &[2, 3, 4]));
        assert_eq!(global_dimension(&cyc), None);
        assert_eq!(projective_dimension(&cyc, &ModuleSum::zero()), Some(0));
        assert_eq!(
            injective_dimension(&cyc, &ModuleSum::single(Uniserial::new(1, 1))),
            None
        );

        for n in 1..=6 {
            let a = Algebra::linear(n).unwrap();
            for u in a.indecomposables() {
                let m = ModuleSum::single(u);
                assert!(projective_dimension(&a, &m).unwrap() <= 1);
                assert!(injective_dimension(&a, &m).unwrap() <= 1);
            }
            assert_eq!(finite_pd_simples(&a).simples().len(), n);
        }
    }
}

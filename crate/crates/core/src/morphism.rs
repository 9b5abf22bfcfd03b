//! Morphisms between sums of interval modules over linear Nakayama algebras, written in the
//! canonical hom bases, and the ghost/coghost machinery built on them.
//!
//! Every nonzero hom space between intervals is one-dimensional, spanned by the map that
//! surjects onto the common subquotient and then injects. The composite of canonical maps
//! `M[a,b] -> M[c,d] -> M[e,f]` is the canonical map `M[a,b] -> M[e,f]` when `a <= f`, else zero.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{Algebra, ModuleSum, Uniserial};
use crate::closure::ExtensionClosure;
use crate::error::{Error, Result};
use crate::homext::{ar_quiver, fac_closure, hom_dim, sub_closure, ArArrow};
use crate::indecset::IndecSet;

/// `coeffs[s][t]` multiplies the canonical map from source summand `s` to target summand `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: ModuleSum,
    target: ModuleSum,
    coeffs: Vec<Vec<BigRational>>,
}

/// Whether the composite of canonical maps `x -> y -> z` is nonzero.
pub fn basis_composite_nonzero(alg: &Algebra, x: &Uniserial, y: &Uniserial, z: &Uniserial) -> bool {
    hom_dim(alg, x, y) == 1 && hom_dim(alg, y, z) == 1 && x.top <= z.bounds().1
}

impl Morphism {
    pub fn new(
        alg: &Algebra,
        source: ModuleSum,
        target: ModuleSum,
        coeffs: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        alg.require_linear("morphism")?;
        alg.check_module(&source)?;
        alg.check_module(&target)?;
        let (ns, nt) = (source.summands().len(), target.summands().len());
        if coeffs.len() != ns || coeffs.iter().any(|row| row.len() != nt) {
            return Err(Error::MorphismMismatch(format!(
                "coefficient matrix is not {ns}x{nt}"
            )));
        }
        for (s, x) in source.summands().iter().enumerate() {
            for (t, y) in target.summands().iter().enumerate() {
                if !coeffs[s][t].is_zero() && hom_dim(alg, x, y) == 0 {
                    return Err(Error::MorphismMismatch(format!("Hom({x}, {y}) is zero")));
                }
            }
        }
        Ok(Morphism {
            source,
            target,
            coeffs,
        })
    }

    pub fn zero(alg: &Algebra, source: ModuleSum, target: ModuleSum) -> Result<Self> {
        let coeffs =
            vec![vec![BigRational::zero(); target.summands().len()]; source.summands().len()];
        Self::new(alg, source, target, coeffs)
    }

    pub fn identity(alg: &Algebra, m: &ModuleSum) -> Result<Self> {
        let k = m.summands().len();
        let coeffs = (0..k)
            .map(|s| {
                (0..k)
                    .map(|t| {
                        if s == t {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(alg, m.clone(), m.clone(), coeffs)
    }

    /// The canonical map `x -> y`.
    pub fn basis(alg: &Algebra, x: Uniserial, y: Uniserial) -> Result<Self> {
        Self::new(
            alg,
            ModuleSum::single(x),
            ModuleSum::single(y),
            vec![vec![BigRational::one()]],
        )
    }

    pub fn source(&self) -> &ModuleSum {
        &self.source
    }

    pub fn target(&self) -> &ModuleSum {
        &self.target
    }

    pub fn coeff(&self, s: usize, t: usize) -> &BigRational {
        &self.coeffs[s][t]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(s, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(t, _)| (s, t))
        })
    }
}

/// `g ∘ f`.
pub fn compose(alg: &Algebra, g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if f.target != g.source {
        return Err(Error::MorphismMismatch(format!(
            "{} is not {}",
            f.target, g.source
        )));
    }
    let xs = f.source.summands();
    let ys = f.target.summands();
    let zs = g.target.summands();
    let mut coeffs = vec![vec![BigRational::zero(); zs.len()]; xs.len()];
    for (s, x) in xs.iter().enumerate() {
        for (u, z) in zs.iter().enumerate() {
            let mut acc = BigRational::zero();
            for (t, y) in ys.iter().enumerate() {
                let (a, b) = (&f.coeffs[s][t], &g.coeffs[t][u]);
                if !a.is_zero() && !b.is_zero() && basis_composite_nonzero(alg, x, y, z) {
                    acc += a * b;
                }
            }
            coeffs[s][u] = acc;
        }
    }
    Ok(Morphism {
        source: f.source.clone(),
        target: g.target.clone(),
        coeffs,
    })
}

/// `Hom(f, I) = 0` for every `I` in `T`: every map out of the target kills `f`.
pub fn is_coghost(alg: &Algebra, f: &Morphism, t: IndecSet) -> bool {
    let members = t.uniserials(alg);
    f.nonzero_entries().all(|(s, u)| {
        let (x, y) = (&f.source.summands()[s], &f.target.summands()[u]);
        members
            .iter()
            .all(|i| !basis_composite_nonzero(alg, x, y, i))
    })
}

/// `Hom(I, f) = 0` for every `I` in `T`: every map into the source is killed by `f`.
pub fn is_ghost(alg: &Algebra, f: &Morphism, t: IndecSet) -> bool {
    let members = t.uniserials(alg);
    f.nonzero_entries().all(|(s, u)| {
        let (x, y) = (&f.source.summands()[s], &f.target.summands()[u]);
        members
            .iter()
            .all(|i| !basis_composite_nonzero(alg, i, x, y))
    })
}

/// No component is an isomorphism between equal summands. Endomorphism rings of intervals
/// are the field, so this is exactly membership in the radical of the category.
pub fn is_radical_morphism(f: &Morphism) -> bool {
    f.nonzero_entries()
        .all(|(s, u)| f.source.summands()[s] != f.target.summands()[u])
}

/// `{M[1,j] : j <= m}` together with all simples.
pub fn tm_generator(alg: &Algebra, m: usize) -> Result<IndecSet> {
    alg.require_linear("tm_generator")?;
    if m == 0 || m >= alg.n() {
        return Err(Error::OutOfRange(format!(
            "m = {m} must lie in 1..{}",
            alg.n()
        )));
    }
    let mut items: Vec<Uniserial> = (1..=m).map(|j| Uniserial::interval(1, j)).collect();
    items.extend((1..=alg.n()).map(|i| Uniserial::new(i, 1)));
    IndecSet::from_uniserials(alg, &items)
}

pub fn arrow_morphism(alg: &Algebra, arrow: &ArArrow) -> Result<Morphism> {
    Morphism::basis(alg, arrow.source(), arrow.target())
}

/// The AR arrows of `A_n` that are `T`-coghosts.
pub fn irreducible_coghosts(alg: &Algebra, t: IndecSet) -> Result<Vec<ArArrow>> {
    let quiver = ar_quiver(alg)?;
    let mut out = Vec::new();
    for arrow in quiver.arrows {
        if is_coghost(alg, &arrow_morphism(alg, &arrow)?, t) {
            out.push(arrow);
        }
    }
    Ok(out)
}

/// `X -> ⊕ I`, one copy of `I ∈ T` per nonzero basis hom from a summand of `X`.
pub fn left_approximation(alg: &Algebra, x: &ModuleSum, t: IndecSet) -> Result<Morphism> {
    alg.require_linear("left_approximation")?;
    let members = t.uniserials(alg);
    let mut slots: Vec<(usize, Uniserial)> = Vec::new();
    for (s, u) in x.summands().iter().enumerate() {
        for i in &members {
            if hom_dim(alg, u, i) == 1 {
                slots.push((s, *i));
            }
        }
    }
    // The target is stored sorted, so slots are matched to target positions by value.
    let target = ModuleSum::new(slots.iter().map(|(_, i)| *i).collect());
    let mut used = vec![false; slots.len()];
    let mut coeffs = vec![vec![BigRational::zero(); slots.len()]; x.summands().len()];
    for (s, i) in &slots {
        let pos = target
            .summands()
            .iter()
            .enumerate()
            .position(|(k, v)| v == i && !used[k])
            .expect("slot present in target");
        used[pos] = true;
        coeffs[*s][pos] = BigRational::one();
    }
    Morphism::new(alg, x.clone(), target, coeffs)
}

/// The kernel inclusion of [`left_approximation`]. For a summand `M[a,b]` whose approximating
/// maps reach down to socles `d_k`, the kernel is `M[max d_k + 1, b]`.
pub fn approximation_kernel(alg: &Algebra, x: &ModuleSum, t: IndecSet) -> Result<Morphism> {
    let approx = left_approximation(alg, x, t)?;
    let mut kernels = Vec::new();
    for (s, u) in x.summands().iter().enumerate() {
        let (a, b) = u.bounds();
        let reach = (0..approx.target.summands().len())
            .filter(|&k| !approx.coeffs[s][k].is_zero())
            .map(|k| approx.target.summands()[k].bounds().1)
            .max()
            .unwrap_or(a - 1);
        if reach < b {
            kernels.push((s, Uniserial::interval(reach + 1, b)));
        }
    }
    let source = ModuleSum::new(kernels.iter().map(|(_, k)| *k).collect());
    let mut coeffs = vec![vec![BigRational::zero(); x.summands().len()]; kernels.len()];
    let mut used = vec![false; kernels.len()];
    for (s, k) in &kernels {
        let pos = source
            .summands()
            .iter()
            .enumerate()
            .position(|(p, v)| v == k && !used[p])
            .expect("kernel present in source");
        used[pos] = true;
        coeffs[pos][*s] = BigRational::one();
    }
    Morphism::new(alg, source, x.clone(), coeffs)
}

/// `reach[y]` as a bit set of sources `x` with a canonical `x -> y` that is the composite of
/// a chain of `steps` canonical maps between indecomposables, each accepted by `keep`.
fn chain_reach(
    alg: &Algebra,
    steps: usize,
    keep: impl Fn(&Uniserial, &Uniserial) -> bool,
) -> Vec<IndecSet> {
    let indec = alg.indecomposables();
    let edge = |x: &Uniserial, y: &Uniserial| hom_dim(alg, x, y) == 1 && keep(x, y);
    // After one step, sources of a kept map into y.
    let mut reach: Vec<IndecSet> = indec
        .iter()
        .map(|y| {
            let mut s = IndecSet::EMPTY;
            for (k, x) in indec.iter().enumerate() {
                if edge(x, y) {
                    s.insert(k);
                }
            }
            s
        })
        .collect();
    for _ in 1..steps {
        reach = indec
            .iter()
            .map(|y| {
                let mut s = IndecSet::EMPTY;
                for (kz, z) in indec.iter().enumerate() {
                    if !edge(z, y) {
                        continue;
                    }
                    for kx in reach[kz].iter() {
                        if basis_composite_nonzero(alg, &indec[kx], z, y) {
                            s.insert(kx);
                        }
                    }
                }
                s
            })
            .collect();
    }
    reach
}

/// Indecomposables `Y` receiving a nonzero `n`-fold `T`-coghost.
pub fn coghost_targets(alg: &Algebra, t: IndecSet, n: usize) -> Result<IndecSet> {
    alg.require_linear("coghost search")?;
    let members = t.uniserials(alg);
    let reach = chain_reach(alg, n, |x, y| {
        members
            .iter()
            .all(|i| !basis_composite_nonzero(alg, x, y, i))
    });
    Ok(collect_nonempty(&reach))
}

/// Indecomposables `X` emitting a nonzero `n`-fold `T`-ghost.
pub fn ghost_sources(alg: &Algebra, t: IndecSet, n: usize) -> Result<IndecSet> {
    alg.require_linear("ghost search")?;
    let members = t.uniserials(alg);
    let reach = chain_reach(alg, n, |x, y| {
        members
            .iter()
            .all(|i| !basis_composite_nonzero(alg, i, x, y))
    });
    let mut out = IndecSet::EMPTY;
    for r in reach {
        out = out.union(r);
    }
    Ok(out)
}

fn collect_nonempty(reach: &[IndecSet]) -> IndecSet {
    let mut out = IndecSet::EMPTY;
    for (k, r) in reach.iter().enumerate() {
        if !r.is_empty() {
            out.insert(k);
        }
    }
    out
}

/// Compares chain searches against the levels of `Sub T` and `Fac T` for `1 <= n <= nmax`.
/// Each violation names the side, the level and the module.
pub fn coghost_lemma_check(alg: &Algebra, t: IndecSet, nmax: usize) -> Result<Vec<String>> {
    let closure = ExtensionClosure::new(alg)?;
    let sub = sub_closure(alg, t);
    let fac = fac_closure(alg, t);
    let mut violations = Vec::new();
    for n in 1..=nmax {
        let cog = coghost_targets(alg, t, n)?;
        let gh = ghost_sources(alg, t, n)?;
        let sub_n = closure.bracket(sub, n);
        let fac_n = closure.bracket(fac, n);
        for (k, y) in alg.indecomposables().iter().enumerate() {
            if cog.contains(k) == sub_n.contains(k) {
                violations.push(format!("coghost side, T={t}, n={n}, Y={y}"));
            }
            if gh.contains(k) == fac_n.contains(k) {
                violations.push(format!("ghost side, T={t}, n={n}, X={y}"));
            }
        }
    }
    Ok(violations)
}

/// Length of the longest chain of canonical non-isomorphisms between indecomposables whose
/// composite is nonzero.
pub fn longest_nonzero_radical_chain(alg: &Algebra) -> Result<usize> {
    alg.require_linear("radical chains")?;
    let mut len = 0;
    loop {
        let reach = chain_reach(alg, len + 1, |x, y| x != y);
        if reach.iter().all(|r| r.is_empty()) {
            return Ok(len);
        }
        len += 1;
    }
}

/// A random radical morphism between random sums of at most `max_summands` intervals:
/// coefficients in `-3..=3` on every admissible non-isomorphism slot.
pub fn random_radical_morphism<R: Rng>(
    alg: &Algebra,
    source: &ModuleSum,
    max_summands: usize,
    rng: &mut R,
) -> Result<Morphism> {
    let indec = alg.indecomposables();
    let k = rng.gen_range(1..=max_summands);
    let target = ModuleSum::new(
        (0..k)
            .map(|_| indec[rng.gen_range(0..indec.len())])
            .collect(),
    );
    let coeffs = source
        .summands()
        .iter()
        .map(|x| {
            target
                .summands()
                .iter()
                .map(|y| {
                    if x != y && hom_dim(alg, x, y) == 1 {
                        BigRational::from_integer(rng.gen_range(-3i64..=3).into())
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    Morphism::new(alg, source.clone(), target, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homext::ArrowKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn iv(i: usize, j: usize) -> Uniserial {
        Uniserial::interval(i, j)
    }

    fn a(n: usize) -> Algebra {
        Algebra::linear(n).unwrap()
    }

    #[test]
    fn composition_rule() {
        let a4 = a(4);
        let f = Morphism::basis(&a4, iv(1, 4), iv(1, 2)).unwrap();
        let g = Morphism::basis(&a4, iv(1, 2), iv(1, 1)).unwrap();
        assert_eq!(
            compose(&a4, &g, &f).unwrap(),
            Morphism::basis(&a4, iv(1, 4), iv(1, 1)).unwrap()
        );
        let f = Morphism::basis(&a4, iv(2, 4), iv(1, 3)).unwrap();
        let g = Morphism::basis(&a4, iv(1, 3), iv(1, 1)).unwrap();
        assert!(compose(&a4, &g, &f).unwrap().is_zero());
        let id = Morphism::identity(&a4, f.target()).unwrap();
        assert_eq!(compose(&a4, &id, &f).unwrap(), f);
        assert!(compose(&a4, &f, &f).is_err());
        assert!(Morphism::basis(&a4, iv(1, 1), iv(2, 2)).is_err());
    }

    #[test]
    fn tm_generators() {
        assert_eq!(tm_generator(&a(4), 2).unwrap().len(), 5);
        assert_eq!(tm_generator(&a(2), 1).unwrap().len(), 2);
        assert_eq!(tm_generator(&a(5), 4).unwrap().len(), 8);
        assert!(tm_generator(&a(4), 4).is_err());
    }

    #[test]
    fn irreducible_coghosts_of_tm() {
        let a4 = a(4);
        let got = irreducible_coghosts(&a4, tm_generator(&a4, 2).unwrap()).unwrap();
        let names: Vec<String> = got.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["f+[3,3]", "f+[3,4]", "f+[4,4]"]);
        let a2 = a(2);
        let got = irreducible_coghosts(&a2, tm_generator(&a2, 1).unwrap()).unwrap();
        assert_eq!(
            got,
            vec![ArArrow {
                kind: ArrowKind::Plus,
                i: 2,
                j: 2
            }]
        );
        assert!(irreducible_coghosts(&a4, IndecSet::all(&a4).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn identity_is_not_a_coghost_for_a_generator() {
        let a4 = a(4);
        let simples = IndecSet::from_module(&a4, &a4.simples_module()).unwrap();
        for u in a4.indecomposables() {
            let id = Morphism::identity(&a4, &ModuleSum::single(u)).unwrap();
            assert!(!is_coghost(&a4, &id, simples));
            assert!(!is_ghost(&a4, &id, simples));
            assert!(is_coghost(&a4, &id, IndecSet::EMPTY));
            assert!(!is_radical_morphism(&id));
        }
    }

    #[test]
    fn approximation_of_projective_by_simples() {
        let a4 = a(4);
        let simples = IndecSet::from_module(&a4, &a4.simples_module()).unwrap();
        let p1 = ModuleSum::single(iv(1, 4));
        let approx = left_approximation(&a4, &p1, simples).unwrap();
        assert_eq!(approx.target().to_string(), "1-1");
        let ker = approximation_kernel(&a4, &p1, simples).unwrap();
        assert_eq!(ker.source(), &ModuleSum::single(iv(2, 4)));
        assert!(is_coghost(&a4, &ker, simples));
        let zero = left_approximation(&a4, &ModuleSum::zero(), simples).unwrap();
        assert!(zero.is_zero() && zero.target().is_zero());
    }

    #[test]
    fn radical_chains_on_small_an() {
        for n in 1..=5 {
            assert_eq!(longest_nonzero_radical_chain(&a(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn longest_chain_example() {
        let a4 = a(4);
        let f1 = Morphism::basis(&a4, iv(1, 4), iv(1, 3)).unwrap();
        let f2 = Morphism::basis(&a4, iv(1, 3), iv(1, 2)).unwrap();
        let f3 = Morphism::basis(&a4, iv(1, 2), iv(1, 1)).unwrap();
        let c = compose(&a4, &f3, &compose(&a4, &f2, &f1).unwrap()).unwrap();
        assert_eq!(c, Morphism::basis(&a4, iv(1, 4), iv(1, 1)).unwrap());
    }

    #[test]
    fn random_radical_morphisms_are_radical() {
        let a5 = a(5);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let src: ModuleSum = "1-3+2-2".parse().unwrap();
        for _ in 0..50 {
            assert!(is_radical_morphism(
                &random_radical_morphism(&a5, &src, 3, &mut rng).unwrap()
            ));
        }
    }

    #[test]
    fn coghost_lemma_on_a3() {
        let a3 = a(3);
        for mask in 0u128..64 {
            assert!(
                coghost_lemma_check(&a3, IndecSet(mask), 3)
                    .unwrap()
                    .is_empty(),
                "T={mask}"
            );
        }
    }
}

use orlov_core::layers::{layer_step, torsion_quotient};
use orlov_core::{
    algebra_llts, projective_dimension, radical_layer_length, torsion_radical, Algebra,
    AlgebraDescriptor, ExtensionClosure, IndecSet, ModuleSum, SpiClass, TorsionSpec,
};
use proptest::prelude::*;

fn descriptor() -> impl Strategy<Value = AlgebraDescriptor> {
    prop_oneof![
        (1usize..=7).prop_map(AlgebraDescriptor::linear),
        (3usize..=7)
            .prop_flat_map(|n| (Just(n), 1..=n - 2))
            .prop_flat_map(|(n, s)| (Just(n), Just(s), 2..=n - s))
            .prop_map(|(n, s, l)| AlgebraDescriptor::linear_with_relation(n, s, l)),
        (1usize..=5)
            .prop_flat_map(|n| (Just(n), 1..=n, 2usize..=12))
            .prop_map(|(n, s, l)| AlgebraDescriptor::cyclic(n, s, l)),
    ]
}

/// An algebra, a set of simples, and a module given by summand indices.
fn setup() -> impl Strategy<Value = (Algebra, TorsionSpec, ModuleSum)> {
    descriptor()
        .prop_flat_map(|d| {
            let alg = Algebra::new(d).unwrap();
            let n = alg.n();
            let count = alg.indecomposable_count();
            (
                Just(alg),
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec(0..count, 0..4),
            )
        })
        .prop_map(|(alg, mask, picks)| {
            let spec = TorsionSpec::new(&alg, (1..=alg.n()).filter(|v| mask[v - 1])).unwrap();
            let m = ModuleSum::new(picks.into_iter().map(|k| alg.indecomposable(k)).collect());
            (alg, spec, m)
        })
}

proptest! {
    #[test]
    fn layer_length_of_torsion_modules_drops_by_one_under_radical((alg, spec, m) in setup()) {
        let t = torsion_radical(&alg, &spec, &m);
        prop_assume!(!t.is_zero());
        prop_assert_eq!(
            radical_layer_length(&alg, &spec, &t),
            radical_layer_length(&alg, &spec, &alg.radical(&t)) + 1
        );
    }

    #[test]
    fn layer_length_of_a_sum_is_the_max((alg, spec, m) in setup()) {
        let max = m.summands().iter().map(|u| radical_layer_length(&alg, &spec, &ModuleSum::single(*u))).max().unwrap_or(0);
        prop_assert_eq!(radical_layer_length(&alg, &spec, &m), max);
    }

    #[test]
    fn iterated_layers_shrink((alg, spec, m) in setup()) {
        let total = algebra_llts(&alg, &spec);
        let mut cur = m;
        for i in 0..=total {
            prop_assert!(radical_layer_length(&alg, &spec, &cur) + i <= total);
            cur = layer_step(&alg, &spec, &cur);
        }
        prop_assert!(cur.is_zero());
    }

    #[test]
    fn torsion_split_preserves_dimension((alg, spec, m) in setup()) {
        let t = torsion_radical(&alg, &spec, &m);
        let q = torsion_quotient(&alg, &spec, &m);
        prop_assert_eq!(t.dimension() + q.dimension(), m.dimension());
        prop_assert_eq!(torsion_radical(&alg, &spec, &t), t);
    }

    #[test]
    fn empty_torsion_spec_gives_loewy_length((alg, _spec, m) in setup()) {
        prop_assert_eq!(radical_layer_length(&alg, &TorsionSpec::empty(&alg), &m), m.loewy_length());
    }

    #[test]
    fn kupisch_series_is_admissible(d in descriptor()) {
        let alg = Algebra::new(d).unwrap();
        let c = alg.kupisch();
        let n = c.len();
        for i in 0..n {
            let next = if i + 1 < n { c[i + 1] } else if d.shape == orlov_core::Shape::Cyclic { c[0] } else { 0 };
            prop_assert!(c[i] >= 1 && c[i] <= next + 1);
        }
        prop_assert_eq!(alg.indecomposable_count(), c.iter().sum::<usize>());
    }

    #[test]
    fn spi_algebras_have_loewy_length_at_most_two(d in descriptor()) {
        let alg = Algebra::new(d).unwrap();
        if alg.spi_classify() != SpiClass::NotSpi {
            prop_assert!(alg.loewy_length() <= 2);
        }
    }

    #[test]
    fn hereditary_modules_have_pd_at_most_one(n in 1usize..=8, k in 0usize..36) {
        let alg = Algebra::linear(n).unwrap();
        let u = alg.indecomposable(k % alg.indecomposable_count());
        prop_assert!(projective_dimension(&alg, &ModuleSum::single(u)).unwrap() <= 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_products_are_monotone(l in 0u128..1 << 15, r in 0u128..1 << 15, l2 in 0u128..1 << 15, r2 in 0u128..1 << 15) {
        let alg = Algebra::linear(5).unwrap();
        let c = ExtensionClosure::new(&alg).unwrap();
        let (l, r) = (IndecSet(l), IndecSet(r));
        let (big_l, big_r) = (l.union(IndecSet(l2)), r.union(IndecSet(r2)));
        prop_assert!(c.star(l, r).is_subset(c.star(big_l, big_r)));
        prop_assert!(l.union(r).is_subset(c.star(l, r)));
    }

    #[test]
    fn adding_summands_never_slows_generation(t in 1u128..1 << 15, extra in 0u128..1 << 15) {
        let alg = Algebra::linear(5).unwrap();
        let c = ExtensionClosure::new(&alg).unwrap();
        let (t, bigger) = (IndecSet(t), IndecSet(t | extra));
        if let Some(time) = c.generation_time(t) {
            prop_assert!(c.generation_time(bigger).unwrap() <= time);
        }
    }
}

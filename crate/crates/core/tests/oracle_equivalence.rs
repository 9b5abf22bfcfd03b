use orlov_core::algebra::{Algebra, AlgebraDescriptor};
use orlov_core::oracle::{self, oracle_star, Oracle, DEFAULT_CAP};
use orlov_core::{ExtensionClosure, IndecSet};

fn algebras() -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for d in AlgebraDescriptor::all_linear(n) {
            out.push(Algebra::new(d).unwrap());
        }
    }
    out
}

#[test]
fn hom_and_pair_extensions_match() {
    for alg in algebras() {
        let o = Oracle::new(&alg);
        let hom = oracle::check_hom(&alg);
        assert!(hom.passed(), "{:?}: {:?}", alg.kupisch(), hom.failures);
        let pairs = oracle::check_pairs(&o, DEFAULT_CAP).unwrap();
        assert!(pairs.passed(), "{:?}: {:?}", alg.kupisch(), pairs.failures);
    }
}

#[test]
fn round_trip_decomposition() {
    for alg in algebras() {
        let o = Oracle::new(&alg);
        let rt = oracle::check_round_trip(&o, 2, DEFAULT_CAP);
        assert!(rt.passed(), "{:?}: {:?}", alg.kupisch(), rt.failures);
    }
}

#[test]
fn star_matches_oracle_on_every_small_linear_algebra() {
    for alg in algebras() {
        let o = Oracle::new(&alg);
        let out = oracle::check_star(&o, 2, DEFAULT_CAP).unwrap();
        assert!(out.passed(), "{:?}: {:?}", alg.kupisch(), out.failures);
    }
}

#[test]
fn literal_subcategory_pairs_on_linear3() {
    let alg = Algebra::linear(3).unwrap();
    let o = Oracle::new(&alg);
    let closure = ExtensionClosure::new(&alg).unwrap();
    let t2 = oracle::middle_summands(&o, 2, DEFAULT_CAP).unwrap();
    // Cap 12 with three copies reaches Ext¹ of dimension 17, beyond full class enumeration.
    let t3 = oracle::middle_summands(&o, 3, 11).unwrap();
    for left in 0u128..64 {
        for right in 0u128..64 {
            let (l, r) = (IndecSet(left), IndecSet(right));
            let star = closure.star(l, r);
            assert_eq!(oracle_star(&t2, l, r), star, "left {l} right {r}");
            assert_eq!(
                oracle_star(&t3, l, r),
                star,
                "left {l} right {r}, multiplicity 3"
            );
        }
    }
}

#[test]
fn larger_configurations_add_no_generators() {
    use orlov_core::extprod::ConfigBound;
    for n in 2..=5 {
        for d in AlgebraDescriptor::all_linear(n) {
            let alg = Algebra::new(d).unwrap();
            let base = ExtensionClosure::new(&alg).unwrap();
            let wide = ExtensionClosure::with_bound(
                &alg,
                ConfigBound {
                    summands: 6,
                    multiplicity: 3,
                },
            )
            .unwrap();
            assert_eq!(
                base.sum_generators(),
                wide.sum_generators(),
                "{:?}",
                alg.kupisch()
            );
        }
    }
}

#[test]
fn cyclic_homs_match() {
    for (n, len) in [(1, 3), (2, 3), (2, 4), (3, 2), (3, 4), (4, 5)] {
        let alg = Algebra::new(AlgebraDescriptor::cyclic(n, 1, len)).unwrap();
        let out = oracle::check_hom(&alg);
        assert!(out.passed(), "{:?}", out.failures);
    }
}

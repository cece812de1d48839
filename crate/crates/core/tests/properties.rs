use std::collections::BTreeSet;

use negabent::constructions::{closed_form_anf, construct, Construction};
use negabent::oracle::naive_transforms;
use negabent::spectra::{
    classify, dual, fragmentary_nega_spectrum, fragmentary_walsh_spectrum, nega_transform, walsh_transform,
};
use negabent::subspaces::{build_modifier_set, GammaSpec, LinearSubspace, ModifierFamily};
use negabent::{AnfPolynomial, BitVector, BooleanFunction, VectorSet};
use proptest::prelude::*;

fn function(max_n: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), 1 << n).prop_map(|v| BooleanFunction::from_values(&v).unwrap())
    })
}

fn function_and_set(max_n: usize) -> impl Strategy<Value = (BooleanFunction, VectorSet)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), 1 << n),
            prop::collection::vec(any::<bool>(), 1 << n),
        )
            .prop_map(move |(f, t)| {
                let set = VectorSet::from_fn(n, |x| t[x as usize]).unwrap();
                (BooleanFunction::from_values(&f).unwrap(), set)
            })
    })
}

fn gamma_set(family: ModifierFamily, k: usize) -> impl Strategy<Value = GammaSpec> {
    let len = family.gamma_len(k);
    prop::collection::btree_set(0..1u64 << len, 1..=(1usize << len).min(6)).prop_filter_map(
        "gammas in distinct cosets",
        move |set| {
            let gammas: Vec<BitVector> = set.into_iter().map(|g| BitVector::new(len, g)).collect();
            GammaSpec::new(family, k, gammas, None).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn anf_round_trip(f in function(10)) {
        let anf = f.anf();
        prop_assert_eq!(&anf.to_function(), &f);
        prop_assert_eq!(anf.degree(), f.algebraic_degree());
        let reparsed = AnfPolynomial::parse(f.n(), &anf.to_string()).unwrap();
        prop_assert_eq!(reparsed, anf);
    }

    #[test]
    fn shifts_compose(f in function(8), a in 0usize..8, b in 0usize..8) {
        let n = f.n();
        let (a, b) = (a % n, b % n);
        let ab = f.cyclic_shift(a).unwrap().cyclic_shift(b).unwrap();
        prop_assert_eq!(ab, f.cyclic_shift((a + b) % n).unwrap());
    }

    #[test]
    fn rotation_order_is_shift_invariant(f in function(8), l in 0usize..8) {
        let n = f.n();
        let order = f.rotation_symmetry_order();
        prop_assert_eq!(n % order, 0);
        prop_assert_eq!(f.cyclic_shift(l % n).unwrap().rotation_symmetry_order(), order);
        if order < n {
            prop_assert_eq!(&f.cyclic_shift(order).unwrap(), &f);
        }
        for smaller in 1..order {
            prop_assert_ne!(&f.cyclic_shift(smaller).unwrap(), &f);
        }
    }

    #[test]
    fn fast_transforms_match_direct_sums(f in function(8)) {
        let s = naive_transforms(&f).unwrap();
        let w = walsh_transform(&f).unwrap();
        let n = nega_transform(&f).unwrap();
        prop_assert_eq!(s.walsh.values(), w.values());
        prop_assert_eq!(s.nega.values(), n.values());
    }

    #[test]
    fn parseval(f in function(12)) {
        prop_assert!(walsh_transform(&f).unwrap().parseval_holds());
        prop_assert!(nega_transform(&f).unwrap().parseval_holds());
    }

    #[test]
    fn fragmentary_sums_split((f, t) in function_and_set(8)) {
        let w = walsh_transform(&f).unwrap();
        let n = nega_transform(&f).unwrap();
        let wt = fragmentary_walsh_spectrum(&f, &t).unwrap();
        let wc = fragmentary_walsh_spectrum(&f, &t.complement()).unwrap();
        let nt = fragmentary_nega_spectrum(&f, &t).unwrap();
        let nc = fragmentary_nega_spectrum(&f, &t.complement()).unwrap();
        for u in 0..f.size() {
            prop_assert_eq!(wt.at(u) + wc.at(u), w.at(u));
            prop_assert_eq!(nt.at(u) + nc.at(u), n.at(u));
        }
    }

    #[test]
    fn coset_representatives_partition(
        n in 1usize..9,
        gens in prop::collection::vec(any::<u64>(), 0..5),
    ) {
        let gens: Vec<BitVector> = gens.iter().map(|&g| BitVector::new(n, g & ((1 << n) - 1))).collect();
        let l = LinearSubspace::span(n, &gens).unwrap();
        let reps = l.coset_representatives();
        prop_assert_eq!(reps.len() << l.dim(), 1usize << n);
        let rep_set: BTreeSet<BitVector> = reps.iter().copied().collect();
        let mut seen = BTreeSet::new();
        for r in &reps {
            for m in l.members() {
                prop_assert!(seen.insert(*r + m));
            }
        }
        prop_assert_eq!(seen.len(), 1 << n);
        for v in 0..1u64 << n {
            let leader = l.coset_leader(&BitVector::new(n, v)).unwrap();
            prop_assert!(rep_set.contains(&leader));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn g4k_random_gamma_is_sound(spec in gamma_set(ModifierFamily::S1, 2)) {
        let size = build_modifier_set(&spec).unwrap().len();
        prop_assert_eq!(size, spec.gammas().len() as u64 * 16);
        let c = Construction::g4k(spec).unwrap();
        let cf = construct(&c).unwrap();
        let class = classify(cf.function()).unwrap();
        prop_assert!(class.is_bent_negabent());
        prop_assert_eq!(&closed_form_anf(&c).unwrap(), &cf.function().anf());
        let d = dual(cf.function()).unwrap();
        prop_assert_eq!(&d, cf.closed_dual());
        prop_assert_eq!(&dual(&d).unwrap(), cf.function());
    }

    #[test]
    fn g8k_random_gamma_is_sound(spec in gamma_set(ModifierFamily::S2, 1)) {
        let c = Construction::g8k(spec).unwrap();
        let cf = construct(&c).unwrap();
        prop_assert!(classify(cf.function()).unwrap().is_bent_negabent());
        let d = dual(cf.function()).unwrap();
        prop_assert_eq!(&d, cf.closed_dual());
        prop_assert_eq!(&dual(&d).unwrap(), cf.function());
    }
}

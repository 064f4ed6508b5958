mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use superrep::oracle::{self, Budget, Zp};
use superrep::quiver::{classify_via_quiver, positive_roots};
use superrep::species::TensorDim;
use superrep::superquiver::classify_via_table;
use superrep::{Bimodule, Field, GradedAlgebra, Label, RepType, Superspecies};

/// Acyclic species on up to `max_n` vertices, arrows from lower to higher
/// index, parameters ≤ `max`.
fn species(max_n: usize, max: usize) -> impl Strategy<Value = Superspecies> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec((0..=max, 0..=max), pairs),
            )
        })
        .prop_map(|(ds, params)| {
            let labels: Vec<Label> = ds.iter().map(|&d| if d { Label::D } else { Label::K }).collect();
            let n = labels.len();
            let mut s = Superspecies::new(labels.clone());
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = params[k];
                    k += 1;
                    let bm = match (labels[i], labels[j]) {
                        (Label::K, Label::K) => Bimodule::KK { d0: a, d1: b },
                        (Label::K, Label::D) => Bimodule::KtoD { rank: a },
                        (Label::D, Label::K) => Bimodule::DtoK { rank: a },
                        (Label::D, Label::D) => Bimodule::DD { plus: a, minus: b },
                    };
                    if bm.left_basis_len() > 0 {
                        s.set_bimodule(i, j, bm);
                    }
                }
            }
            s
        })
}

fn small_dim(s: &Superspecies, limit: u32) -> bool {
    matches!(s.tensor_algebra_dim(), TensorDim::Finite(d) if d <= BigUint::from(limit))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classification_routes_agree(s in species(5, 2)) {
        prop_assert_eq!(classify_via_quiver(&s).unwrap(), classify_via_table(&s).unwrap());
    }

    #[test]
    fn finite_type_iff_finitely_many_roots(s in species(4, 2)) {
        let d = s.quiver_of().underlying_diagram();
        let finite = classify_via_quiver(&s).unwrap() == RepType::Finite;
        prop_assert_eq!(finite, positive_roots(&d).is_ok());
    }

    #[test]
    fn superquiver_round_trip(s in species(5, 2)) {
        let q = s.superquiver_of();
        prop_assert!(q.is_realizable());
        prop_assert!(q.species_from().unwrap().superquiver_of().is_isomorphic(&q));
    }

    #[test]
    fn json_round_trip(s in species(5, 2)) {
        prop_assert_eq!(Superspecies::from_json(&s.to_json()).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tensor_dim_matches_built_algebra(s in species(4, 1)) {
        prop_assume!(small_dim(&s, 60));
        let t = s.tensor_algebra(Field::Rational).unwrap();
        prop_assert_eq!(TensorDim::Finite(BigUint::from(t.dim())), s.tensor_algebra_dim());
        prop_assert!(t.validate().is_valid());
    }

    #[test]
    fn smash_product_doubles_dimension(s in species(3, 1)) {
        prop_assume!(small_dim(&s, 20));
        let t = s.tensor_algebra(Field::prime(3).unwrap()).unwrap();
        let smash = t.smash_product();
        prop_assert_eq!(smash.dim(), 2 * t.dim());
        prop_assert_eq!(smash.graded_dims().1, 0);
        prop_assert!(smash.validate().is_valid());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Over small fields every check of the equivalence holds, including
    /// Krull–Schmidt and H ∘ H⁻¹ = id.
    #[test]
    fn equivalence_holds(s in species(3, 1), p in prop::sample::select(vec![2u32, 3])) {
        let budget = Budget { total: 2, ..Budget::default() };
        let r = oracle::verify_equivalence(&s, Zp::new(p).unwrap(), &budget).unwrap();
        prop_assert!(r.passed, "{:?}", r.failures);
    }

    /// For finite type the count is one per root and independent of the field.
    #[test]
    fn finite_counts_field_independent(s in species(3, 1)) {
        prop_assume!(classify_via_quiver(&s).unwrap() == RepType::Finite);
        let budget = Budget { total: 3, ..Budget::default() };
        let f2 = oracle::count_species_indecomposables(&s, Zp::new(2).unwrap(), &budget).unwrap();
        let f3 = oracle::count_species_indecomposables(&s, Zp::new(3).unwrap(), &budget).unwrap();
        prop_assert_eq!(f2.dimension_vectors(), f3.dimension_vectors());
        let (inside, _) = oracle::roots_within_budget(&s, &budget).unwrap();
        prop_assert_eq!(f2.total, inside.len());
    }
}

#[test]
fn d_algebra_tensor_square_is_graded() {
    let d = GradedAlgebra::d_algebra(Field::Rational);
    let dd = d.tensor(&d).unwrap();
    assert_eq!(dd.dim(), 4);
    assert_eq!(dd.graded_dims(), (2, 2));
    assert!(dd.validate().is_valid());
}

//! Randomized structure checks on scrambled models `M_k(F^σ[H])`.

mod common;

use common::*;
use gradedalg::analysis::{
    center_space, centralizer, centralizer_space, corner, identity_component, is_graded_division, is_graded_simple,
    is_simple_ungraded, jacobson_radical, wedderburn_decompose,
};
use gradedalg::field::linalg::{vec_add, Matrix, Vector};
use gradedalg::io;
use gradedalg::recovery::{decompose, decomposition_equivalent, decomposition_verify, GradedDecomposition};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() }
}

fn model_strategy() -> impl Strategy<Value = RandomModel> {
    (prop::array::uniform6(0usize..1000), any::<u64>())
        .prop_filter_map("no admissible prime", |(choice, seed)| random_model(choice, seed))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn models_are_graded_simple(m in model_strategy()) {
        prop_assert!(is_graded_simple(&m.alg, 1).unwrap().simple, "{}", m.description);
    }

    #[test]
    fn identity_component_is_semisimple(m in model_strategy()) {
        let (re, _) = identity_component(&m.alg).unwrap();
        prop_assert!(jacobson_radical(&re).unwrap().is_zero(), "{}", m.description);
    }

    #[test]
    fn corners_at_diagonal_idempotents_are_graded_simple(m in model_strategy(), mask in 1u32..256) {
        let r = &m.alg;
        let f = r.field();
        let (re, emb) = identity_component(r).unwrap();
        let diagonal: Vec<Vector> = wedderburn_decompose(&re, 2)
            .unwrap()
            .iter()
            .flat_map(|b| (0..b.size).map(move |a| b.units[a][a].clone()))
            .collect();
        let picked: Vec<&Vector> = diagonal.iter().enumerate().filter(|(i, _)| mask & (1 << (i % 8)) != 0).map(|(_, v)| v).collect();
        prop_assume!(!picked.is_empty());
        let t = emb.to_parent(f, &picked.iter().fold(vec![f.zero(); re.dim()], |acc, v| vec_add(f, &acc, v)));
        let (c, _) = corner(r, &t).unwrap();
        prop_assert!(is_graded_simple(&c, 3).unwrap().simple, "{}", m.description);
    }

    #[test]
    fn simple_identity_component_factors_the_algebra(m in model_strategy()) {
        let r = &m.alg;
        let (re, emb) = identity_component(r).unwrap();
        let blocks = wedderburn_decompose(&re, 4).unwrap();
        prop_assume!(blocks.len() == 1);
        let a: Vec<Vector> = emb.basis().to_vec();
        let c = centralizer_space(r, &a);
        prop_assert_eq!(r.dim(), re.dim() * c.dim(), "{}", m.description);
        let products = span_of(r, a.iter().flat_map(|x| c.basis().iter().map(|y| r.multiply(x, y))));
        prop_assert!(products.is_full());
        let (cent, _) = centralizer(r, &a).unwrap();
        prop_assert!(is_graded_division(&cent, 5).unwrap().division);
    }

    #[test]
    fn simple_iff_central(m in model_strategy()) {
        match is_simple_ungraded(&m.alg, 6) {
            Ok(simple) => prop_assert_eq!(simple, center_space(&m.alg).dim() == 1, "{}", m.description),
            Err(gradedalg::Error::NotSplit { .. }) => {}
            Err(e) => prop_assert!(false, "{}: {e}", m.description),
        }
    }

    #[test]
    fn decomposition_recovers_the_data(m in model_strategy(), seed in any::<u64>()) {
        let r = &m.alg;
        let d = decompose(r, seed).unwrap();
        prop_assert_eq!(d.k * d.k * d.subgroup.order(), r.dim());
        prop_assert_eq!(decomposition_verify(r, &d), Ok(()));
        let n = r.dim();
        let input = GradedDecomposition {
            k: m.tuple.len(),
            tuple: m.tuple.clone(),
            subgroup: m.subgroup.clone(),
            sigma: m.sigma.clone(),
            iso: Matrix::identity(r.field(), n),
        };
        let q = r.field().p() - 1;
        prop_assert!(decomposition_equivalent(&d, &input, &m.group, q).unwrap(), "{}", m.description);
        if r.component_dim(r.group().identity()) == 1 {
            prop_assert_eq!(d.k, 1);
            let support = r.support();
            prop_assert_eq!(d.subgroup.members(), support.as_slice());
        }
    }

    #[test]
    fn algebra_json_roundtrips(m in model_strategy()) {
        let text = io::algebra_to_string(&m.alg);
        prop_assert_eq!(io::algebra_from_str(&text).unwrap(), m.alg);
    }

    #[test]
    fn simplicity_matches_the_closure_oracle(m in model_strategy()) {
        prop_assume!(m.alg.dim() <= 16);
        prop_assert!(oracle_graded_simple(&m.alg, 7));
        let forgotten = m.alg.forget_grading();
        prop_assert_eq!(is_graded_simple(&forgotten, 7).unwrap().simple, oracle_graded_simple(&forgotten, 7));
    }
}

use disemisimple::classify::enumerate_modules;
use disemisimple::liealg::{semidirect, semisimple_algebra, LieAlgebra, SemisimpleSpec};
use disemisimple::linalg::Matrix;
use disemisimple::prehom::{evaluation_matrix, is_prehomogeneous, Mode};
use disemisimple::rational::{format_q, parse_q, q, q_frac, Q};
use disemisimple::repbuilder::{realize, IrrLabel, ModuleDescriptor, Representation};
use disemisimple::rootdata::{dual_weight, weyl_dim, DominantWeight, SimpleType};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q_frac(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(move |rows| {
            Matrix::from_rows(c, rows.into_iter().map(|row| row.into_iter().map(q).collect()).collect())
        })
    })
}

fn simple_type() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (1usize..=4).prop_map(SimpleType::a),
        (3usize..=4).prop_map(SimpleType::b),
        (2usize..=4).prop_map(SimpleType::c),
        (4usize..=5).prop_map(SimpleType::d),
    ]
}

fn a2_modules() -> Vec<ModuleDescriptor> {
    enumerate_modules(&SemisimpleSpec::simple(SimpleType::a(2)), 7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_strings_round_trip(x in rational()) {
        prop_assert_eq!(parse_q(&format_q(&x)).unwrap(), x);
    }

    #[test]
    fn rank_nullity(m in matrix(6)) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn inverse_when_determinant_nonzero(m in (1usize..=5).prop_flat_map(|n| matrix(n).prop_filter("square", |m| m.rows() == m.cols()))) {
        let det = m.determinant();
        match m.inverse() {
            Some(inv) => {
                prop_assert!(det != q(0));
                prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows()));
            }
            None => prop_assert_eq!(det, q(0)),
        }
    }

    #[test]
    fn dual_weights_have_equal_dimension(t in simple_type(), seed in prop::collection::vec(0u32..=1, 5)) {
        let w = DominantWeight(seed.into_iter().take(t.rank).chain(std::iter::repeat(0)).take(t.rank).collect());
        let d = dual_weight(t, &w).unwrap();
        prop_assert_eq!(weyl_dim(t, &w).unwrap(), weyl_dim(t, &d).unwrap());
        prop_assert_eq!(dual_weight(t, &d).unwrap(), w);
    }

    #[test]
    fn realized_modules_decompose_to_their_descriptor(k in 0usize..16) {
        let modules = a2_modules();
        let d = &modules[k % modules.len()];
        let spec = SemisimpleSpec::simple(SimpleType::a(2));
        let r = realize(&spec, d).unwrap();
        prop_assert_eq!(r.dim() as u64, d.dim(&spec).unwrap());
        r.check_homomorphism().unwrap();
        prop_assert_eq!(&r.decompose().unwrap(), d);
        let dual = r.dual().decompose().unwrap();
        let expected = d.map_labels(|l| IrrLabel(vec![dual_weight(SimpleType::a(2), &l.0[0]).unwrap()]));
        prop_assert_eq!(dual, expected);
    }

    #[test]
    fn witnesses_verify_and_verdicts_ignore_the_seed(k in 0usize..16, seed in any::<u64>()) {
        let modules = a2_modules();
        let d = &modules[k % modules.len()];
        let r = realize(&SemisimpleSpec::simple(SimpleType::a(2)), d).unwrap();
        let randomized = is_prehomogeneous(&r, Mode::Randomized { seed, trials: 4 });
        let symbolic = is_prehomogeneous(&r, Mode::Symbolic);
        prop_assert!(randomized.verify(&r) && symbolic.verify(&r));
        prop_assert_eq!(randomized.is_prehomogeneous(), symbolic.is_prehomogeneous());
        if let Some(v) = randomized.witness() {
            prop_assert_eq!(evaluation_matrix(&r, v).unwrap().rank(), r.dim());
        }
    }

    #[test]
    fn exp_ad_of_radical_elements_is_an_automorphism(coords in prop::collection::vec(-3i64..=3, 3)) {
        let spec = SemisimpleSpec::simple(SimpleType::a(2));
        let r = Representation::natural(SimpleType::a(2)).unwrap();
        let g = semidirect(&semisimple_algebra(&spec).unwrap(), &r, &LieAlgebra::abelian(3)).unwrap();
        let mut z = vec![q(0); 8];
        z.extend(coords.into_iter().map(q));
        prop_assert!(g.is_homomorphism(&g.exp_ad(&z).unwrap()));
    }
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    for (t, bound) in [(SimpleType::a(2), 7), (SimpleType::c(2), 9), (SimpleType::a(3), 14)] {
        let spec = SemisimpleSpec::simple(t);
        let keys: Vec<(u64, ModuleDescriptor)> =
            enumerate_modules(&spec, bound).into_iter().map(|d| (d.dim(&spec).unwrap(), d)).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{t}");
        assert!(keys.iter().all(|(d, m)| *d <= bound && !m.has_trivial()));
    }
}

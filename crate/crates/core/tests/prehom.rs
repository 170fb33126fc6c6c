use disemisimple::liealg::{semidirect, semisimple_algebra, LieAlgebra, SemisimpleSpec, Subspace};
use disemisimple::prehom::{
    certify_disemisimple, evaluation_matrix, is_etale, is_prehomogeneous, symbolic_rank, BoundMethod, Mode, NoReason,
    PrehomCertificate, Refusal,
};
use disemisimple::rational::q;
use disemisimple::repbuilder::{irreducible, realize, spin16_d5, IrrLabel, ModuleDescriptor, Representation};
use disemisimple::rootdata::{DominantWeight, SimpleType};

fn w(c: &[u32]) -> DominantWeight {
    DominantWeight(c.to_vec())
}

fn module(spec: &str, labels: &[(&[&[u32]], u32)]) -> Representation {
    let spec = parse_spec(spec);
    let d = ModuleDescriptor::new(labels.iter().map(|(ws, m)| (IrrLabel(ws.iter().map(|c| w(c)).collect()), *m)));
    realize(&spec, &d).unwrap()
}

fn parse_spec(s: &str) -> SemisimpleSpec {
    SemisimpleSpec::new(s.split('x').map(|t| t.parse().unwrap()).collect())
}

fn assert_reason(c: &PrehomCertificate, f: impl Fn(&NoReason) -> bool) {
    assert!(c.reason().is_some_and(f), "{c:?}");
}

#[test]
fn natural_sl2_has_full_rank_at_e1() {
    let r = Representation::natural(SimpleType::a(1)).unwrap();
    assert_eq!(evaluation_matrix(&r, &[q(1), q(0)]).unwrap().rank(), 2);
    assert_eq!(evaluation_matrix(&r, &[q(0), q(0)]).unwrap().rank(), 0);
    assert!(evaluation_matrix(&r, &[q(1)]).is_err());
}

#[test]
fn fast_paths() {
    let triv = Representation::trivial_over(&parse_spec("A1"), 1).unwrap();
    assert_reason(&is_prehomogeneous(&triv, Mode::default()), |r| *r == NoReason::TrivialSummand);
    let cubic = irreducible(SimpleType::a(1), &w(&[3])).unwrap();
    assert_reason(&is_prehomogeneous(&cubic, Mode::default()), |r| *r == NoReason::DimensionBound);
    let adj = irreducible(SimpleType::a(1), &w(&[2])).unwrap();
    assert_reason(&is_prehomogeneous(&adj, Mode::default()), |r| *r == NoReason::EtaleExclusion);
    let zero = Representation::trivial_over(&parse_spec("A2"), 0).unwrap();
    assert!(is_prehomogeneous(&zero, Mode::Symbolic).is_prehomogeneous());
}

#[test]
fn etale_is_never_attained() {
    assert!(!is_etale(&irreducible(SimpleType::a(1), &w(&[2])).unwrap()));
    assert!(!is_etale(&irreducible(SimpleType::a(2), &w(&[1, 1])).unwrap()));
    assert!(!is_etale(&Representation::natural(SimpleType::a(1)).unwrap()));
}

#[test]
fn sl2_tensor_sl2_is_not_prehomogeneous() {
    let r = module("A1xA1", &[(&[&[1], &[1]], 1)]);
    for mode in [Mode::default(), Mode::Symbolic] {
        let c = is_prehomogeneous(&r, mode);
        assert_reason(&c, |reason| {
            matches!(
                reason,
                NoReason::SymbolicRankDeficit { generic_rank: 3, upper_bound: 3, method: BoundMethod::Elimination }
            )
        });
    }
    let sum = module("A1xA1", &[(&[&[0], &[1]], 1), (&[&[1], &[0]], 1)]);
    let c = is_prehomogeneous(&sum, Mode::default());
    assert!(c.is_prehomogeneous() && c.verify(&sum));
}

#[test]
fn invariant_certificates() {
    // Sym^2 of C^3 carries the determinant; the adjoint of sl3 has two invariants.
    for (t, c) in [(SimpleType::a(2), vec![1, 1]), (SimpleType::c(3), vec![0, 0, 1]), (SimpleType::b(3), vec![0, 0, 1])]
    {
        let r = irreducible(t, &w(&c)).unwrap();
        let sr = symbolic_rank(&r);
        assert!(sr.upper < r.dim(), "{t} {c:?}: {sr:?}");
        assert!(sr.is_exact(), "{t} {c:?}: {sr:?}");
    }
}

#[test]
fn spin16_is_prehomogeneous() {
    let s = spin16_d5().unwrap();
    let c = is_prehomogeneous(&s, Mode::default());
    assert!(c.is_prehomogeneous());
    let v = c.witness().unwrap();
    let m = evaluation_matrix(&s, v).unwrap();
    assert_eq!((m.matrix.rows(), m.matrix.cols()), (16, 45));
    assert_eq!(m.rank(), 16);
}

fn semidirect_with(spec: &str, r: &Representation) -> LieAlgebra {
    let s = semisimple_algebra(&parse_spec(spec)).unwrap();
    semidirect(&s, r, &LieAlgebra::abelian(r.dim())).unwrap()
}

#[test]
fn sl2_semidirect_natural_is_disemisimple() {
    let r = Representation::natural(SimpleType::a(1)).unwrap();
    let g = semidirect_with("A1", &r);
    let cert = certify_disemisimple(&g, &Subspace::coordinate(5, 0..3)).unwrap();
    let cert = cert.certificate().expect("certified");
    assert_eq!(cert.intersection_dim, 1);
    cert.verify(&g).unwrap();

    let v3 = irreducible(SimpleType::a(1), &w(&[2])).unwrap();
    let g = semidirect_with("A1", &v3);
    let out = certify_disemisimple(&g, &Subspace::coordinate(6, 0..3)).unwrap();
    assert!(matches!(out.refusal(), Some(Refusal::RadicalNotPrehomogeneous { .. })));
}

#[test]
fn semisimple_algebra_certifies_itself() {
    let g = semisimple_algebra(&parse_spec("A2")).unwrap();
    let out = certify_disemisimple(&g, &Subspace::full(8)).unwrap();
    let c = out.certificate().unwrap();
    assert!(c.z.iter().all(|x| *x == q(0)));
    assert_eq!(c.s2_basis, c.levi_basis);
}

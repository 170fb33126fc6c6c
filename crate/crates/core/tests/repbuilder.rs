use disemisimple::liealg::SemisimpleSpec;
use disemisimple::repbuilder::{
    fock_b, half_spin_d, irreducible, realize, spin16_d5, IrrLabel, ModuleDescriptor, Representation,
};
use disemisimple::rootdata::{dual_weight, weyl_dim, DominantWeight, SimpleType};

fn w(c: &[u32]) -> DominantWeight {
    DominantWeight(c.to_vec())
}

fn single(t: SimpleType, terms: &[(&[u32], u32)]) -> ModuleDescriptor {
    assert!(terms.iter().all(|(c, _)| t.check_weight(&w(c)).is_ok()));
    ModuleDescriptor::simple(&terms.iter().map(|(c, m)| (w(c), *m)).collect::<Vec<_>>())
}

#[test]
fn natural_dimensions() {
    for (t, d) in [(SimpleType::a(1), 2), (SimpleType::c(2), 4), (SimpleType::a(4), 5), (SimpleType::b(3), 7)] {
        let r = Representation::natural(t).unwrap();
        assert_eq!(r.dim(), d);
        r.check_homomorphism().unwrap();
        assert_eq!(r.decompose().unwrap(), ModuleDescriptor::irreducible(IrrLabel(vec![t.omega(1)])));
    }
}

#[test]
fn tensor_square_of_sl2_natural() {
    let nat = Representation::natural(SimpleType::a(1)).unwrap();
    let t = nat.tensor(&nat).unwrap();
    let hw = t.highest_weight_vectors().unwrap();
    assert_eq!(hw.len(), 2);
    assert_eq!(t.decompose().unwrap(), single(SimpleType::a(1), &[(&[2], 1), (&[0], 1)]));
}

#[test]
fn wedge_and_sym_of_type_a() {
    let a4 = SimpleType::a(4);
    let nat = Representation::natural(a4).unwrap();
    assert_eq!(nat.wedge2().decompose().unwrap(), single(a4, &[(&[0, 1, 0, 0], 1)]));
    let a2 = SimpleType::a(2);
    let n2 = Representation::natural(a2).unwrap();
    assert_eq!(n2.sym2().decompose().unwrap(), single(a2, &[(&[2, 0], 1)]));
    assert_eq!(n2.tensor(&n2).unwrap().decompose().unwrap(), single(a2, &[(&[2, 0], 1), (&[0, 1], 1)]));
}

#[test]
fn spin_modules() {
    let s = spin16_d5().unwrap();
    assert_eq!(s.dim(), 16);
    s.check_homomorphism().unwrap();
    assert_eq!(s.decompose().unwrap(), single(SimpleType::d(5), &[(&[0, 0, 0, 1, 0], 1)]));
    let b3 = fock_b(3).unwrap();
    b3.check_homomorphism().unwrap();
    assert_eq!(b3.decompose().unwrap(), single(SimpleType::b(3), &[(&[0, 0, 1], 1)]));
    let d4 = half_spin_d(4, 3).unwrap();
    assert_eq!(d4.dim(), 8);
}

#[test]
fn realize_matches_weyl_dimension() {
    let cases: Vec<(SimpleType, Vec<u32>)> = vec![
        (SimpleType::a(2), vec![1, 1]),
        (SimpleType::a(4), vec![2, 0, 0, 0]),
        (SimpleType::c(2), vec![0, 1]),
        (SimpleType::c(3), vec![0, 1, 0]),
        (SimpleType::c(3), vec![0, 0, 1]),
        (SimpleType::b(2), vec![0, 1]),
        (SimpleType::d(4), vec![0, 0, 1, 0]),
        (SimpleType::d(3), vec![0, 1, 0]),
        (SimpleType::a(1), vec![3]),
    ];
    for (t, c) in cases {
        let lam = w(&c);
        let r = irreducible(t, &lam).unwrap();
        assert_eq!(r.dim() as u64, weyl_dim(t, &lam).unwrap(), "{t} {lam}");
        r.check_homomorphism().unwrap();
        assert_eq!(r.decompose().unwrap(), ModuleDescriptor::irreducible(IrrLabel(vec![lam.clone()])));
        let dual = r.dual().decompose().unwrap();
        assert_eq!(dual, ModuleDescriptor::irreducible(IrrLabel(vec![dual_weight(t, &lam).unwrap()])));
    }
}

#[test]
fn outer_tensor_module() {
    let spec = SemisimpleSpec::new(vec![SimpleType::a(1), SimpleType::a(2)]);
    let d = ModuleDescriptor::irreducible(IrrLabel(vec![w(&[1]), w(&[0, 1])]));
    let r = realize(&spec, &d).unwrap();
    assert_eq!(r.dim(), 6);
    r.check_homomorphism().unwrap();
    assert_eq!(r.decompose().unwrap(), d);
}

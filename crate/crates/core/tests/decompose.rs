use hopfkit_core::algebra::group_hopf_algebra;
use hopfkit_core::group::GroupTable;
use hopfkit_core::superalg::{decompose, exterior_hopf, SuperHopf};
use hopfkit_core::ScalarField;

fn lambda_w_h(w: usize) -> SuperHopf {
    let q = ScalarField::Rationals;
    let h = SuperHopf::purely_even(group_hopf_algebra(&GroupTable::cyclic(2), q)).unwrap();
    exterior_hopf(w, q).unwrap().hopf.tensor(&h).unwrap()
}

// Some bases send an odd basis vector to zero under δ.
#[test]
fn decomposes_in_every_scrambled_basis() {
    for w in 1..=2 {
        let a = lambda_w_h(w);
        for seed in 0..16 {
            let (s, _) = a.scrambled(seed).unwrap();
            let r = decompose(&s).unwrap_or_else(|e| panic!("w = {w}, seed {seed}: {e:?}"));
            assert!(r.alpha.is_bijective(), "w = {w}, seed {seed}");
            assert_eq!(r.hopf.dim(), 2);
        }
    }
}

#[test]
fn pure_exterior_has_trivial_even_quotient() {
    for seed in 0..4 {
        let (s, _) = exterior_hopf(3, ScalarField::Rationals).unwrap().hopf.scrambled(seed).unwrap();
        let r = decompose(&s).unwrap();
        assert_eq!(r.hopf.dim(), 1);
        assert!(r.alpha.is_bijective());
    }
}

//! Howe duality mechanics on signatures with q = 0 or n = 0, where the
//! unitarity test itself does not apply.

use proptest::prelude::*;
use upqn::oscillator::{commutation_exhaustive, herm, joint_hwv, psi_sigma_check, Oscillator, SuperPolynomial};
use upqn::rational::frac;
use upqn::Signature;

#[test]
fn joint_hwv_without_x_or_eta() {
    for (d, (p, q, n)) in [(1, (1, 0, 1)), (2, (1, 0, 2)), (2, (2, 1, 0)), (1, (2, 2, 0)), (2, (1, 1, 0))] {
        let s = Signature::new(p, q, n).unwrap();
        let r = joint_hwv(d, s, 4).unwrap();
        assert!(r.verified(), "d={d} {s}: missing {:?}", r.missing);
        assert_eq!(commutation_exhaustive(d, s, 3).unwrap(), None);
        assert!(psi_sigma_check(d, s).unwrap());
    }
}

proptest! {
    #[test]
    fn herm_is_positive_definite(coeffs in prop::collection::vec((-20i64..20, 1i64..5), 1..12)) {
        let osc = Oscillator::new(2, Signature::new(1, 1, 1).unwrap()).unwrap();
        let monos = osc.monomials_up_to(3);
        let mut f = SuperPolynomial::zero();
        for (k, (a, b)) in coeffs.iter().enumerate() {
            let m = monos[(k * 7) % monos.len()].clone();
            f = f.add(&SuperPolynomial::term(m, frac(*a, *b)));
        }
        let norm = herm(&f, &f);
        prop_assert_eq!(f.is_zero(), norm == frac(0, 1));
        prop_assert!(norm >= frac(0, 1));
    }
}

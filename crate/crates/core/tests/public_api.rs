use proptest::prelude::*;
use rqr::genus::explore;
use rqr::laws::{verify, Law, VerifyOptions};
use rqr::modulus::odd_moduli_up_to;
use rqr::oracles::{jacobi_bruteforce, quartic_symbol_bruteforce};
use rqr::{
    all_two_squares, alpha_triple, fundamental_negative_unit, jacobi, quartic_symbol_composite, two_squares_composite,
    unit_times_sqrt_as_alpha, FourOneModulus,
};

fn moduli() -> Vec<u64> {
    odd_moduli_up_to(3000).iter().map(|m| m.value()).collect()
}

fn modulus() -> impl Strategy<Value = FourOneModulus> {
    prop::sample::select(moduli()).prop_map(|v| FourOneModulus::new(v).unwrap())
}

fn small_modulus() -> impl Strategy<Value = FourOneModulus> {
    prop::sample::select(odd_moduli_up_to(999))
}

fn oracle() -> VerifyOptions {
    VerifyOptions {
        oracle: true,
        ..Default::default()
    }
}

proptest! {
    #[test]
    fn jacobi_agrees_with_bruteforce(m in modulus(), a in -50_000i128..50_000) {
        prop_assert_eq!(jacobi(a, m.value().into()).unwrap(), jacobi_bruteforce(a, &m).unwrap());
    }

    #[test]
    fn composite_quartic_agrees_with_bruteforce(m in modulus(), a in 1i128..100_000) {
        let fast = quartic_symbol_composite(a, &m);
        let slow = quartic_symbol_bruteforce(a, &m);
        prop_assert_eq!(fast.is_ok(), slow.is_ok());
        if let (Ok(f), Ok(s)) = (fast, slow) {
            prop_assert_eq!(f, s);
        }
    }

    #[test]
    fn canonical_rep_is_listed(m in modulus()) {
        let rep = two_squares_composite(&m).unwrap();
        prop_assert!(rep.a % 2 == 1 && rep.b.is_multiple_of(2));
        prop_assert_eq!(u128::from(rep.a).pow(2) + u128::from(rep.b).pow(2), u128::from(m.value()));
        prop_assert!(all_two_squares(m.value()).unwrap().contains(&rep));
    }

    #[test]
    fn alpha_norm_equation(m in modulus()) {
        let t = alpha_triple(&m).unwrap();
        let mb = num_bigint::BigInt::from(m.value());
        prop_assert_eq!(&t.a * &t.a, mb * (&t.b * &t.b + &t.c * &t.c));
    }

    #[test]
    fn every_law_passes_its_oracle(m in small_modulus(), n in small_modulus(), law in prop::sample::select(vec![
        Law::Burde, Law::Scholz, Law::ScholzMutual, Law::Furuta,
    ])) {
        prop_assume!(m.value() != n.value());
        let r = verify(law, m.value(), n.value(), oracle()).unwrap();
        prop_assert!(r.is_skipped() || r.matched, "{}", r.to_json_line());
    }

    #[test]
    fn genus_is_consistent(d in prop::sample::select(moduli())) {
        prop_assume!(FourOneModulus::new(d).unwrap().rank() >= 2);
        let r = explore(d).unwrap();
        prop_assert!(r.real_count <= r.c4_count && r.c4_count <= r.splits.len());
        for s in &r.splits {
            prop_assert!(s.d1 < s.d2 && s.d1 * s.d2 == d);
        }
    }
}

#[test]
fn ec_with_oracle_on_small_range() {
    for m in odd_moduli_up_to(200) {
        for p in (5..1000u64).step_by(4).filter(|&p| rqr::is_prime(p).unwrap()) {
            let r = verify(Law::Ec, m.value(), p, oracle()).unwrap();
            assert!(
                r.is_skipped() || (r.matched && r.sides.len() == 4),
                "{}",
                r.to_json_line()
            );
        }
    }
}

#[test]
fn unit_alpha_is_a_valid_triple() {
    for m in odd_moduli_up_to(600) {
        if let Ok(e) = fundamental_negative_unit(&m) {
            let t = unit_times_sqrt_as_alpha(&e).unwrap();
            assert_eq!(t.c, 1.into());
        }
    }
}

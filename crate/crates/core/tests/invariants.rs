//! Property tests for the structural identities the algorithms rely on.

use icanon::canonical::{psi_a, psi_i, Flavor};
use icanon::hecke::{HeckeElt, HeckeParams};
use icanon::laurent::LaurentPoly;
use icanon::qtensor::{letters, TensorElt, TensorIndex, TensorSpace};
use icanon::weyl::{self, Kind, WeylElt};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -3i64..=3), 0..3).prop_map(LaurentPoly::from_terms)
}

fn arb_params() -> impl Strategy<Value = HeckeParams> {
    prop_oneof![
        (2usize..=4).prop_map(|m| HeckeParams::equal(Kind::A, m)),
        (2usize..=3, 0i32..=2).prop_map(|(m, k)| HeckeParams::new(Kind::B, m, k)),
        Just(HeckeParams::equal(Kind::D, 3)),
    ]
}

fn arb_hecke(p: HeckeParams) -> impl Strategy<Value = HeckeElt> {
    let elts = weyl::enumerate(p.kind, p.rank).unwrap();
    prop::collection::vec((prop::sample::select(elts), arb_poly()), 0..4)
        .prop_map(move |terms| HeckeElt::from_terms(p, terms))
}

fn arb_word(p: HeckeParams) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(prop::sample::select(p.generators()), 0..8)
}

fn arb_tensor(n: usize, m: usize) -> impl Strategy<Value = TensorElt> {
    let space = TensorSpace::new(n, m).unwrap();
    let index = prop::collection::vec(prop::sample::select(letters(n)), m).prop_map(TensorIndex);
    prop::collection::vec((index, arb_poly()), 0..4)
        .prop_map(move |terms| TensorElt::from_terms(space, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hecke_bar_is_ring_involution(
        (x, y) in arb_params().prop_flat_map(|p| (arb_hecke(p), arb_hecke(p)))
    ) {
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        prop_assert_eq!((&x + &y).bar(), &x.bar() + &y.bar());
    }

    #[test]
    fn hecke_multiplication_is_associative(
        (x, y, z) in arb_params().prop_flat_map(|p| (arb_hecke(p), arb_hecke(p), arb_hecke(p)))
    ) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn generator_inverse(
        (x, word) in arb_params().prop_flat_map(|p| (arb_hecke(p), arb_word(p)))
    ) {
        for &i in &word {
            prop_assert_eq!(x.mul_gen(i).mul_gen_inv(i), x.clone());
        }
    }

    #[test]
    fn words_reduce_consistently(word in arb_params().prop_flat_map(arb_word), p in arb_params()) {
        let word: Vec<usize> = word.into_iter().filter(|i| p.generators().contains(i)).collect();
        let w = WeylElt::from_word(p.kind, p.rank, &word).unwrap();
        let red = w.reduced_word();
        prop_assert!(red.len() <= word.len());
        prop_assert_eq!(red.len(), w.length());
        prop_assert_eq!(WeylElt::from_word(p.kind, p.rank, &red).unwrap(), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn module_action_is_invertible(x in arb_tensor(3, 3), k in 0i32..=2) {
        for flavor in [Flavor::A, Flavor::Iota(k)] {
            for i in flavor.hecke_params(3).generators() {
                prop_assert_eq!(flavor.act_inv_elt(&flavor.act_elt(&x, i), i), x.clone());
            }
        }
    }

    #[test]
    fn psi_is_antilinear_involution(x in arb_tensor(3, 2), c in arb_poly(), k in 0i32..=2) {
        let y = psi_a(&x).unwrap();
        prop_assert_eq!(psi_a(&y).unwrap(), x.clone());
        prop_assert_eq!(psi_a(&x.scale(&c)).unwrap(), y.scale(&c.bar()));
        let z = psi_i(&x, k).unwrap();
        prop_assert_eq!(psi_i(&z, k).unwrap(), x.clone());
        prop_assert_eq!(psi_i(&x.scale(&c), k).unwrap(), z.scale(&c.bar()));
    }

    #[test]
    fn psi_commutes_with_bar_of_hecke(x in arb_tensor(4, 3), k in 0i32..=2) {
        // psi(x H_i) = psi(x) H_i^-1
        for flavor in [Flavor::A, Flavor::Iota(k)] {
            let psi = |v: &TensorElt| match flavor {
                Flavor::A => psi_a(v).unwrap(),
                Flavor::Iota(k) => psi_i(v, k).unwrap(),
            };
            for i in flavor.hecke_params(3).generators() {
                prop_assert_eq!(psi(&flavor.act_elt(&x, i)), flavor.act_inv_elt(&psi(&x), i));
            }
        }
    }
}

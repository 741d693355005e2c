//! Structural invariants checked exhaustively on small systems and with
//! randomized inputs.

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cayley_lift_core::cartan::{self, Involution};
use cayley_lift_core::coherent;
use cayley_lift_core::parameters::{self, CentralCharacterLabel, PairSetParameter, SignedPair};
use cayley_lift_core::root_system::{half_integral_roots, integral_positive_roots};
use cayley_lift_core::weyl::{RootPerm, WeylWord};
use cayley_lift_core::{Family, GroupFamily, RootSystem};

fn small_families() -> Vec<GroupFamily> {
    let mut v: Vec<GroupFamily> = (2..=6).map(|n| GroupFamily::sl(n).unwrap()).collect();
    v.extend((3..=5).map(|n| GroupFamily::spin(n).unwrap()));
    v
}

fn all_families() -> Vec<GroupFamily> {
    let mut v = small_families();
    v.extend([6, 7, 8].map(|r| GroupFamily::e(r).unwrap()));
    v
}

/// Every parameter of every central character (block for A/D, orbit
/// representatives for E).
fn shipped_parameters(sys: &RootSystem) -> Vec<PairSetParameter> {
    let mut out = Vec::new();
    for chi in CentralCharacterLabel::all(sys).unwrap() {
        match sys.family().family() {
            Family::E => out.extend(parameters::class_representatives(sys, chi).unwrap().into_iter().map(|(_, p)| p)),
            _ => out.extend(parameters::enumerate_block(sys, chi, 100_000).unwrap()),
        }
    }
    out
}

fn assert_involution(sys: &RootSystem, theta: &Involution, what: &str) {
    let perm = theta.perm();
    assert!(perm.compose(perm).is_identity(), "θ² ≠ Id for {what}");
    let images: HashSet<usize> = (0..sys.len()).map(|i| theta.apply(i)).collect();
    assert_eq!(images.len(), sys.len(), "θ does not permute Δ for {what}");
    // θ is linear: θ(−α) = −θ(α).
    for i in 0..sys.len() {
        assert_eq!(theta.apply(sys.negate(i)), sys.negate(theta.apply(i)), "{what}");
    }
    assert!(theta.is_valid_involution(sys), "{what}");
}

#[test]
fn shipped_involutions_are_involutions_of_delta() {
    for f in all_families() {
        let sys = RootSystem::new(f).unwrap();
        for p in shipped_parameters(&sys) {
            assert_involution(&sys, &p.involution(&sys).unwrap(), &p.render());
        }
        for c in cartan::classes(f) {
            assert_involution(&sys, &cartan::involution_for_class(&sys, &c).unwrap(), &c.label());
        }
    }
}

#[test]
fn positive_roots_split_by_integrality_at_half_rho() {
    for f in all_families() {
        let sys = RootSystem::new(f).unwrap();
        let lambda = sys.half_rho();
        let one: HashSet<usize> = integral_positive_roots(&sys).into_iter().collect();
        let half: HashSet<usize> = half_integral_roots(&sys).into_iter().collect();
        assert!(one.is_disjoint(&half), "{}", f.label());
        assert_eq!(one.len() + half.len(), sys.num_positive(), "{}", f.label());
        // Independent check: 2⟨ρ/2, α∨⟩ = ⟨ρ, α∨⟩ is the height of α.
        for a in 0..sys.num_positive() {
            assert_eq!(sys.height(a) % 2 == 0, one.contains(&a), "{} root {}", f.label(), sys.root_label(a));
            let pairing = cayley_lift_core::root_system::pairing(&lambda, sys.root(a)).unwrap();
            assert_eq!(pairing * 2, cayley_lift_core::rational::int(sys.height(a)));
        }
    }
}

/// Signed pairs available for a Cayley transform in type A or D.
fn candidate_pairs(sys: &RootSystem) -> Vec<SignedPair> {
    let n = sys.family().n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(SignedPair::plus(i, j));
                if sys.family().family() == Family::D && i < j {
                    out.push(SignedPair::minus(i, j));
                }
            }
        }
    }
    out
}

fn disjoint(a: &SignedPair, b: &SignedPair) -> bool {
    a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cayley_transforms_along_disjoint_pairs_commute(fam in 0usize..8, pick in any::<u64>()) {
        let f = small_families()[fam];
        let sys = RootSystem::new(f).unwrap();
        let params = shipped_parameters(&sys);
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        let p = &params[rng.gen_range(0..params.len())];
        let pairs = candidate_pairs(&sys);
        let a = pairs[rng.gen_range(0..pairs.len())];
        let others: Vec<SignedPair> = pairs.iter().copied().filter(|b| disjoint(&a, b)).collect();
        if others.is_empty() {
            return Ok(());
        }
        let b = others[rng.gen_range(0..others.len())];
        let ab = parameters::cayley(&sys, p, a).and_then(|q| parameters::cayley(&sys, &q, b));
        let ba = parameters::cayley(&sys, p, b).and_then(|q| parameters::cayley(&sys, &q, a));
        match (ab, ba) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "only one order defined: {:?} / {:?}", x, y),
        }
    }

    #[test]
    fn length_strictly_decreases_under_containment(fam in 0usize..8, pick in any::<u64>()) {
        let f = small_families()[fam];
        let sys = RootSystem::new(f).unwrap();
        let params = shipped_parameters(&sys);
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        let p1 = &params[rng.gen_range(0..params.len())];
        let p2 = &params[rng.gen_range(0..params.len())];
        prop_assume!(p1.chi() == p2.chi() && p1 != p2);
        if parameters::contains(p1, p2).unwrap() {
            prop_assert!(parameters::length(&sys, p1).unwrap() > parameters::length(&sys, p2).unwrap());
        }
    }

    #[test]
    fn single_cayley_step_lowers_length(fam in 0usize..8, pick in any::<u64>()) {
        let f = small_families()[fam];
        let sys = RootSystem::new(f).unwrap();
        let params = shipped_parameters(&sys);
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        let p = &params[rng.gen_range(0..params.len())];
        let pairs = candidate_pairs(&sys);
        let a = pairs[rng.gen_range(0..pairs.len())];
        if let Ok(q) = parameters::cayley(&sys, p, a) {
            prop_assert!(parameters::contains(p, &q).unwrap());
            prop_assert!(parameters::length(&sys, &q).unwrap() < parameters::length(&sys, p).unwrap());
        }
    }
}

/// A random word for the same element as `base`: insert cancelling
/// blocks `u u⁻¹` at random positions, then apply random braid moves
/// (`st = ts` for commuting letters, `sts = tst` for adjacent ones).
fn random_word_for(sys: &RootSystem, base: &WeylWord, rng: &mut ChaCha8Rng) -> WeylWord {
    let rank = sys.rank();
    let cartan = sys.cartan_matrix();
    let mut letters = base.letters.clone();
    for _ in 0..rng.gen_range(0..6) {
        let pos = rng.gen_range(0..=letters.len());
        let len = rng.gen_range(1..4);
        let u: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rank)).collect();
        let block: Vec<usize> = u.iter().chain(u.iter().rev()).copied().collect();
        letters.splice(pos..pos, block);
    }
    for _ in 0..4 * letters.len() {
        if letters.len() < 2 {
            break;
        }
        let k = rng.gen_range(0..letters.len() - 1);
        let (s, t) = (letters[k], letters[k + 1]);
        if s != t && cartan[s][t] == 0 {
            letters.swap(k, k + 1);
        } else if s != t && k + 2 < letters.len() && letters[k + 2] == s {
            letters[k] = t;
            letters[k + 1] = s;
            letters[k + 2] = t;
        }
    }
    WeylWord::new(letters)
}

#[test]
fn epsilon_depends_only_on_the_element() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let families = [2, 3, 4, 5].map(|n| GroupFamily::sl(n).unwrap()).into_iter().chain([3, 4].map(|n| GroupFamily::spin(n).unwrap()));
    for f in families {
        let sys = RootSystem::new(f).unwrap();
        assert!(sys.rank() <= 4);
        for p in shipped_parameters(&sys) {
            for _ in 0..4 {
                let len = rng.gen_range(0..12);
                let w0 = WeylWord::new((0..len).map(|_| rng.gen_range(0..sys.rank())).collect());
                let element = RootPerm::from_word(&sys, &w0).unwrap();
                let words: Vec<WeylWord> = (0..100).map(|_| random_word_for(&sys, &w0, &mut rng)).collect();
                assert!(words.iter().all(|w| RootPerm::from_word(&sys, w).unwrap() == element));
                let by_element = coherent::epsilon_by_element(&sys, &p, &words).unwrap();
                assert_eq!(by_element.len(), 1);
                let signs = by_element.values().next().unwrap();
                assert_eq!(signs.len(), 1, "{} {}: ε depends on the word", f.label(), p.render());
            }
        }
    }
}

#[test]
fn length_matches_type_a_closed_form() {
    for n in 2..=6 {
        let sys = RootSystem::new(GroupFamily::sl(n).unwrap()).unwrap();
        for p in shipped_parameters(&sys) {
            if let Some(l) = parameters::length_closed_form(&sys, &p) {
                assert_eq!(parameters::length(&sys, &p).unwrap(), l, "{}", p.render());
            }
        }
    }
}

#[test]
fn split_parameter_has_split_length() {
    for f in all_families() {
        let sys = RootSystem::new(f).unwrap();
        let chi = CentralCharacterLabel::new(&sys, 0).unwrap();
        let base = PairSetParameter::base(chi);
        assert_eq!(parameters::length(&sys, &base).unwrap(), parameters::split_length(&sys));
    }
}

//! Worked examples with published values: small-representation counts,
//! witness chains, lifting coefficients, character-matrix inversion,
//! centers and the support equality of the lifting theorem.

use cayley_lift_core::cartan::{self, RootTypeTag};
use cayley_lift_core::coherent::{self, WitnessKind, WitnessSource};
use cayley_lift_core::klv_poset::{self, ParameterPoset};
use cayley_lift_core::lifting;
use cayley_lift_core::parameters::{self, CentralCharacterLabel};
use cayley_lift_core::{Error, GroupFamily, RootSystem};

fn sl(n: usize) -> GroupFamily {
    GroupFamily::sl(n).unwrap()
}

fn spin(n: usize) -> GroupFamily {
    GroupFamily::spin(n).unwrap()
}

fn e(r: usize) -> GroupFamily {
    GroupFamily::e(r).unwrap()
}

// ---------------------------------------------------------------- counts

#[test]
fn exceptional_counts_are_one_four_one() {
    assert_eq!(coherent::count_small(e(6)).unwrap().value, 1);
    assert_eq!(coherent::count_small(e(7)).unwrap().value, 4);
    assert_eq!(coherent::count_small(e(8)).unwrap().value, 1);
}

#[test]
fn type_a_counts() {
    for p in 2..=4 {
        assert_eq!(coherent::count_small(sl(2 * p)).unwrap().value, 4, "SL({})", 2 * p);
    }
    for p in 1..=3 {
        assert_eq!(coherent::count_small(sl(2 * p + 1)).unwrap().value, 1, "SL({})", 2 * p + 1);
    }
}

#[test]
fn type_d_counts() {
    for p in 2..=3 {
        assert_eq!(coherent::count_small(spin(2 * p)).unwrap().value, 16, "Spin({0},{0})", 2 * p);
    }
    for p in 1..=2 {
        assert_eq!(coherent::count_small(spin(2 * p + 1)).unwrap().value, 4, "Spin({0},{0})", 2 * p + 1);
    }
}

#[test]
fn count_equals_central_characters_times_survivors() {
    for f in [sl(4), sl(5), spin(4), spin(5), e(6), e(7), e(8)] {
        let r = coherent::count_small(f).unwrap();
        assert_eq!(r.upper_bound, r.lower_bound);
        let sys = RootSystem::new(f).unwrap();
        assert_eq!(r.value, parameters::pi_rd_all(&sys).unwrap().len(), "{}", f.label());
    }
}

// ------------------------------------------------------------- witnesses

const E6_030_TYPES: [&str; 12] = ["im", "im", "cx", "cx", "im", "cx", "cx", "real", "cx", "cx", "cx", "cx"];

#[test]
fn e6_030_chain() {
    let c = coherent::replay_witness("E6-030").unwrap();
    let tags: Vec<&str> = c.steps.iter().map(|s| s.tag.short()).collect();
    assert_eq!(tags, E6_030_TYPES);
    assert_eq!(c.imaginary_count, 3);
    assert_eq!(c.sign, -1);
    assert!(c.violates_star());
}

/// The printed 72-step chain, roots up to sign.
const E7_320_PRINTED: [(&str, &str); 72] = [
    ("-e4+e5", "cx"), ("-e3+e5", "cx"), ("-e2+e5", "cx"), ("-e1+e5", "cx"), ("-e4+e6", "cx"), ("-e3+e6", "cx"),
    ("-e2+e6", "cx"), ("-e1+e6", "cx"), ("e5+e6", "real"), ("e1+e5", "cx"), ("e2+e5", "cx"), ("e3+e5", "cx"),
    ("e4+e5", "cx"), ("e1+e6", "cx"), ("e2+e6", "cx"), ("e3+e6", "cx"), ("e4+e6", "cx"), ("-e1+e2", "im"),
    ("-e3+e4", "im"), ("-e1+e4", "im"), ("e2+e4", "im"), ("e1+e2", "im"), ("e2+e3", "im"), ("e1+e4", "im"),
    ("b37", "cx"), ("b1347", "cx"), ("e2+e3", "im"), ("b1237", "cx"), ("b2347", "cx"), ("-e1+e4", "im"),
    ("b47", "cx"), ("-e1+e2", "im"), ("b27", "cx"), ("b17", "cx"), ("b1247", "cx"), ("e2+e4", "im"),
    ("e1+e4", "im"), ("b3467", "cx"), ("b123467", "cx"), ("b2367", "cx"), ("b1367", "cx"), ("b3457", "cx"),
    ("b123457", "cx"), ("b2357", "cx"), ("b1357", "cx"), ("-e7+e8", "im"), ("b2467", "cx"), ("b1467", "cx"),
    ("b67", "cx"), ("b1267", "cx"), ("b2457", "cx"), ("b1457", "cx"), ("b57", "cx"), ("b1257", "cx"),
    ("e1+e2", "im"), ("-e2+e4", "im"), ("-e1+e4", "im"), ("b123567", "cx"), ("b234567", "cx"), ("b134567", "cx"),
    ("b3567", "cx"), ("-e1+e2", "im"), ("e2+e4", "im"), ("b1567", "cx"), ("b124567", "cx"), ("b2567", "cx"),
    ("b4567", "cx"), ("-e2+e4", "im"), ("e1+e2", "im"), ("-e1+e4", "im"), ("e2+e4", "im"), ("e1-e2", "im"),
];

#[test]
fn e7_320_chain_matches_printed_list() {
    let sys = RootSystem::new(e(7)).unwrap();
    let c = coherent::replay_witness("E7-320").unwrap();
    assert_eq!(c.steps.len(), 72);
    assert_eq!(c.imaginary_count, 23);
    for (step, (label, tag)) in c.steps.iter().zip(E7_320_PRINTED) {
        let printed = sys.parse_root(label).unwrap();
        assert!(
            step.root_idx == printed || step.root_idx == sys.negate(printed),
            "step {}: {} vs {}",
            step.index,
            step.root,
            label
        );
        assert_eq!(step.tag, RootTypeTag::parse(tag).unwrap(), "step {}", step.index);
    }
    assert_eq!(E7_320_PRINTED.iter().filter(|(_, t)| *t == "im").count(), 23);
}

#[test]
fn real_reflection_witnesses_have_all_real_chains() {
    let ids: Vec<String> = coherent::witness_catalog()
        .into_iter()
        .filter(|w| w.kind == WitnessKind::RealReflection)
        .map(|w| w.id)
        .collect();
    assert_eq!(ids.len(), 12);
    for id in ids {
        let c = coherent::replay_witness(&id).unwrap();
        assert_eq!(c.imaginary_count, 0, "{id}");
        assert!(c.steps.iter().all(|s| s.tag == RootTypeTag::Real), "{id}");
        assert!(c.violates_star(), "{id}");
    }
}

#[test]
fn remaining_published_witnesses_replay() {
    for id in ["E7-130", "E7-031", "E8-040"] {
        let c = coherent::replay_witness(id).unwrap();
        assert_eq!(c.imaginary_count, 3, "{id}");
        assert!(c.violates_star(), "{id}");
    }
}

#[test]
fn published_s13_witnesses_are_rejected_and_replaced() {
    for id in ["E7-510", "E8-610", "E8-420", "E8-230"] {
        match coherent::replay_witness(id) {
            Err(Error::Certificate { step: 0, detail }) => assert!(detail.contains("W^C"), "{id}: {detail}"),
            other => panic!("{id}: expected a certificate failure, got {other:?}"),
        }
        let alt = format!("{id}-alt");
        let w = coherent::find_witness(&alt).unwrap();
        assert_eq!(w.source, WitnessSource::Supplementary);
        let c = coherent::replay_witness(&alt).unwrap();
        assert!(c.violates_star(), "{alt}");
        assert!(c.is_consistent());
    }
}

#[test]
fn unknown_witness_is_an_argument_error() {
    assert!(matches!(coherent::replay_witness("E9-000"), Err(Error::Argument(_))));
}

// ----------------------------------------------------- lifting constants

#[test]
fn type_a_long_set_coefficient() {
    for p in 2..=5 {
        let k = lifting::k_coefficient_by_name(sl(2 * p), "pi").unwrap();
        assert_eq!(k.value, if p % 2 == 0 { 1 } else { -1 }, "SL({})", 2 * p);
    }
}

#[test]
fn type_d_short_set_coefficient() {
    for n in 4..=8 {
        assert_eq!(lifting::k_coefficient_by_name(spin(n), "pi").unwrap().value, 1, "D{n}");
    }
}

#[test]
fn type_d_long_set_coefficients() {
    for p in 2..=4 {
        for name in ["delta", "sigma"] {
            let k = lifting::k_coefficient_by_name(spin(2 * p), name).unwrap();
            assert_eq!(k.value, if p % 2 == 0 { 1 } else { -1 }, "D{} {name}", 2 * p);
        }
    }
}

#[test]
fn e7_coefficient() {
    let k = lifting::k_coefficient_by_name(e(7), "pi").unwrap();
    assert_eq!(k.set, "{α1,α3,α7}");
    assert_eq!(k.value, -1);
}

#[test]
fn k_is_an_alternating_sum_of_cartan_constants() {
    // Independent recomputation: K_S = 2·(−1)^{|S|} + Σ_{S'⊊S} (−1)^{|S'|}.
    for f in [sl(4), sl(6), spin(4), spin(6), e(7)] {
        for set in parameters::rd_sets(f) {
            let s = set.elements.len() as u32;
            let proper: i64 = (0..s).map(|k| binomial(s, k) * if k % 2 == 0 { 1 } else { -1 }).sum();
            let full = 2 * if s % 2 == 0 { 1 } else { -1 };
            let sys = RootSystem::new(f).unwrap();
            assert_eq!(lifting::k_coefficient(&sys, &set).unwrap().value, proper + full);
        }
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

// -------------------------------------------------------------- inversion

fn check_inversion(f: GroupFamily) {
    let sys = RootSystem::new(f).unwrap();
    for chi in CentralCharacterLabel::all(&sys).unwrap() {
        let poset = ParameterPoset::rd_poset(&sys, chi).unwrap();
        for star in klv_poset::gamma_star_catalog(&sys, chi).unwrap() {
            let c = klv_poset::verify_inversion(&sys, &poset, &star).unwrap();
            assert!(c.holds, "{} γ* = {}: {:?}", f.label(), star.render(), c.failing);
            // Independent assembly of (M·m)(γ*, δ) over the tower below γ*.
            let below: Vec<_> = poset
                .elements
                .iter()
                .filter(|p| parameters::contains(p, &star).unwrap())
                .cloned()
                .collect();
            for delta in &below {
                let sum: i64 = below
                    .iter()
                    .map(|g| {
                        klv_poset::M_entry(&sys, &star, g).unwrap() * klv_poset::m_entry(&sys, g, delta).unwrap()
                    })
                    .sum();
                assert_eq!(sum, i64::from(delta == &star), "{} δ = {}", f.label(), delta.render());
            }
        }
    }
}

#[test]
fn inversion_sl4_sl6_sl8() {
    for n in [4, 6, 8] {
        check_inversion(sl(n));
    }
}

#[test]
fn inversion_spin44_spin55() {
    check_inversion(spin(4));
    check_inversion(spin(5));
}

#[test]
fn inversion_e7_tower() {
    let sys = RootSystem::new(e(7)).unwrap();
    let chi = CentralCharacterLabel::new(&sys, 0).unwrap();
    let set = &parameters::rd_sets(e(7))[0];
    let t = klv_poset::tower_matrices(&sys, chi, set).unwrap();
    assert_eq!(t.elements.len(), 8);
    assert!(t.is_identity());
    check_inversion(e(7));
}

#[test]
fn alternating_binomial_tails() {
    // The closed form 1 + (−1)^k for k ≥ 2.
    for k in 2..12u32 {
        assert_eq!(klv_poset::alternating_binomial_tail(k), if k % 2 == 0 { 2 } else { 0 }, "k = {k}");
    }
}

// ----------------------------------------------------------------- centers

#[test]
fn e7_lattice_quotient() {
    let sys = RootSystem::new(e(7)).unwrap();
    let q = cartan::lattice_quotient(&sys).unwrap();
    assert_eq!(q.order, 2);
    let cls = cartan::coweight_class(&sys, &[0, 0, 0, 0, 0, -1, 1]).unwrap();
    assert!(cls.iter().any(|&c| c != 0));
    assert!(q.classes.contains(&cls));
}

#[test]
fn e6_e8_lattice_quotients_are_trivial() {
    for r in [6, 8] {
        let sys = RootSystem::new(e(r)).unwrap();
        assert_eq!(cartan::lattice_quotient(&sys).unwrap().order, 1);
    }
}

#[test]
fn cover_centers() {
    let center = |f| cartan::cover_center(&RootSystem::new(f).unwrap()).unwrap().invariant_factors;
    assert_eq!(center(e(7)), vec![2, 2]);
    assert_eq!(center(e(6)), vec![2]);
    assert_eq!(center(e(8)), vec![2]);
    for p in 1..=4 {
        assert_eq!(center(sl(2 * p)), vec![2, 2], "SL({})", 2 * p);
    }
    for p in 1..=4 {
        assert_eq!(center(sl(2 * p + 1)), vec![2], "SL({})", 2 * p + 1);
    }
}

// ----------------------------------------------------------- main theorem

#[test]
fn verify_every_family() {
    let mut families: Vec<GroupFamily> = (2..=GroupFamily::MAX_A_N).map(sl).collect();
    families.extend((3..=GroupFamily::MAX_D_N).map(spin));
    families.extend([e(6), e(7), e(8)]);
    for f in families {
        let r = lifting::verify_main_theorem(f).unwrap_or_else(|err| panic!("{}: {err}", f.label()));
        assert!(r.passed);
        let lift = lifting::lift_trivial(f).unwrap();
        assert!(lift.combination.terms().all(|(_, c)| c == 1 || c == -1), "{}", f.label());
        assert_eq!(lift.combination.len(), coherent::count_small(f).unwrap().value, "{}", f.label());
    }
}

#[test]
fn lift_texts() {
    assert_eq!(lifting::lift_trivial(sl(4)).unwrap().text, "Sh₁+Sh₂+(π₁+π₂)");
    assert_eq!(lifting::lift_trivial(sl(6)).unwrap().text, "Sh₁+Sh₂−(π₁+π₂)");
    assert_eq!(lifting::lift_trivial(e(7)).unwrap().text, "Sh₁+Sh₂−(π₁+π₂)");
    for f in [sl(5), e(6), e(8)] {
        assert_eq!(lifting::lift_trivial(f).unwrap().text, "Sh");
    }
}

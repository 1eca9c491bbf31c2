use proptest::prelude::*;

use almost_special::dn_classification::{enumerate_classes, in_x, in_y};
use almost_special::partitions::partitions;
use almost_special::perm_groups::{catalog, identify, quotient, GroupKind, PermGroup};
use almost_special::sign_twist::{check_complement_domination, default_cutoff, tensor_sign};
use almost_special::symbols::{Bipartition, Symbol};

fn partition_strategy(max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max.max(1), 0..6).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

/// Symbols of positive rank, in arbitrary row order and shift.
fn symbol_strategy() -> impl Strategy<Value = Symbol> {
    (partition_strategy(8), partition_strategy(8), 0..3usize, any::<bool>())
        .prop_filter("positive rank", |(a, b, _, _)| !(a.is_empty() && b.is_empty()))
        .prop_map(|(a, b, shifts, swap)| {
            let mut s = Symbol::from_bipartition(&Bipartition::new(a, b).unwrap());
            for _ in 0..shifts {
                s = s.shift_up();
            }
            if swap {
                s.swapped()
            } else {
                s
            }
        })
}

proptest! {
    #[test]
    fn shift_and_reduce_preserve_rank(s in symbol_strategy()) {
        let n = s.rank().unwrap();
        prop_assert_eq!(s.shift_up().rank().unwrap(), n);
        prop_assert_eq!(s.reduce().unwrap().rank().unwrap(), n);
        prop_assert!(s.reduce().unwrap().is_reduced());
    }

    #[test]
    fn canonical_is_a_class_invariant(s in symbol_strategy()) {
        let c = s.canonical().unwrap();
        prop_assert_eq!(c.representative().canonical().unwrap(), c.clone());
        prop_assert_eq!(s.shift_up().canonical().unwrap(), c.clone());
        prop_assert_eq!(s.swapped().canonical().unwrap(), c.clone());
        prop_assert_eq!(s.shift_up().is_degenerate(), s.is_degenerate());
        prop_assert_eq!(s.swapped().is_degenerate(), s.is_degenerate());
    }

    #[test]
    fn text_and_json_round_trip(s in symbol_strategy()) {
        prop_assert_eq!(s.to_string().parse::<Symbol>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Symbol>(&json).unwrap(), s);
    }

    #[test]
    fn twist_is_cutoff_independent(s in symbol_strategy(), extra in 0u32..8, extra2 in 0u32..8) {
        let min = default_cutoff(&s);
        let a = tensor_sign(&s, min + extra).unwrap();
        let b = tensor_sign(&s, min + extra2).unwrap();
        prop_assert!(a.is_equivalent(&b).unwrap());
        prop_assert_eq!(a.rank().unwrap(), s.rank().unwrap());
        prop_assert_eq!(a.is_degenerate(), s.is_degenerate());
    }

    #[test]
    fn membership_ignores_stored_row_order(s in symbol_strategy()) {
        let c = s.canonical().unwrap();
        prop_assume!(!c.is_degenerate());
        let swapped = c.representative().swapped().canonical().unwrap();
        prop_assert_eq!(in_y(&c), in_y(&swapped));
        prop_assert_eq!(in_x(&c), in_x(&swapped));
    }

    #[test]
    fn complement_domination_on_dominated_symbols(s in symbol_strategy(), extra in 0u32..6) {
        let dominated = |t: &Symbol| t.top().iter().zip(t.bottom()).all(|(a, b)| a <= b);
        prop_assume!(dominated(&s) || dominated(&s.swapped()));
        prop_assert!(check_complement_domination(&s, default_cutoff(&s) + extra).unwrap());
    }
}

#[test]
fn bipartition_round_trip_up_to_size_20() {
    let by_size: Vec<_> = (0..=20).map(partitions).collect();
    let mut checked = 0;
    for total in 1..=20usize {
        for k in 0..=total {
            for alpha in &by_size[k] {
                for beta in &by_size[total - k] {
                    let b = Bipartition::new(alpha.clone(), beta.clone()).unwrap();
                    let s = Symbol::from_bipartition(&b);
                    assert_eq!(s.rank().unwrap() as usize, total);
                    assert_eq!(s.is_degenerate(), alpha == beta);
                    assert_eq!(s.to_bipartition(), b);
                    assert!(Symbol::from_bipartition(&s.to_bipartition()).is_equivalent(&s).unwrap());
                    assert_eq!(s.shift_up().to_bipartition(), b);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 30_000);
}

#[test]
fn x_subset_of_y_up_to_rank_24() {
    for n in 4..=24 {
        for c in enumerate_classes(n).iter().filter(|c| !c.is_degenerate()) {
            if in_x(c).unwrap() {
                assert!(in_y(c).unwrap(), "{c}");
            }
        }
    }
}

#[test]
fn quotient_by_trivial_keeps_the_kind() {
    for ambient in [GroupKind::S3, GroupKind::S4, GroupKind::S5] {
        for (name, g) in catalog(&ambient).unwrap() {
            let trivial = PermGroup::trivial(g.degree()).unwrap();
            let q = quotient(&g, &trivial).unwrap();
            assert_eq!(identify(&q.table), identify(&g.cayley_table()), "{ambient} {name}");
            assert_eq!(identify(&quotient(&g, &g).unwrap().table), GroupKind::Trivial);
        }
    }
}

#[test]
fn both_normal_klein_subgroups_of_d8_give_s2() {
    let d8 = PermGroup::from_cycle_gens(5, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]).unwrap();
    let kleins = [
        PermGroup::from_cycle_gens(5, &[&[&[1, 3], &[2, 4]], &[&[1, 2], &[3, 4]]]).unwrap(),
        PermGroup::from_cycle_gens(5, &[&[&[1, 3]], &[&[2, 4]]]).unwrap(),
    ];
    for k in &kleins {
        assert_eq!(k.order(), 4);
        assert_eq!(identify(&quotient(&d8, k).unwrap().table), GroupKind::S2);
        assert_eq!(identify(&k.cayley_table()), GroupKind::K4);
    }
}

#[test]
fn any_order_two_subgroup_of_s2s2_gives_s2() {
    let s2s2 = PermGroup::from_cycle_gens(4, &[&[&[1, 2]], &[&[3, 4]]]).unwrap();
    for gen in [&[&[1usize, 2][..]][..], &[&[3, 4]], &[&[1, 2], &[3, 4]]] {
        let h = PermGroup::from_cycle_gens(4, &[gen]).unwrap();
        assert_eq!(identify(&quotient(&s2s2, &h).unwrap().table), GroupKind::S2);
    }
}

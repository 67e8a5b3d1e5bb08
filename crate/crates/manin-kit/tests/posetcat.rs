mod common;

use common::binom;
use manin_kit::fincat::{relative_adjunction_with_parameter, Category, TieBreak};
use manin_kit::posetcat::{
    check_adjunction_counts, check_downset_table, check_p_table, cohom_c, cohom_p, render_tables, searched_p_table, subset_name, union_family,
    verify_subcategory_cohom_differs, MaxPoset, SubsetCategory, MAX_GROUND,
};
use proptest::prelude::*;

#[test]
fn max_table_for_n8() {
    let p = MaxPoset::new(8).unwrap();
    let c = check_p_table(&p).unwrap();
    assert!(c.passed(), "{:?}", c.mismatches);
    assert_eq!(c.pairs, 81);
    assert_eq!(cohom_p(8, 3, 5).unwrap(), 5);
    assert_eq!(cohom_p(8, 5, 3).unwrap(), 0);
    assert_eq!(cohom_p(8, 4, 4).unwrap(), 0);
    assert!(cohom_p(8, 9, 0).is_err());
}

#[test]
fn downset_table_for_n8() {
    let c = SubsetCategory::new(8).unwrap();
    let t = check_downset_table(&c).unwrap();
    assert!(t.passed(), "{:?}", t.mismatches);
    assert_eq!(cohom_c(SubsetCategory::downset(2), SubsetCategory::downset(5)), 0b11100);
    assert_eq!(subset_name(0b11100), "{3,4,5}");
    assert_eq!(subset_name(0), "{}");
}

#[test]
fn witnesses_for_n8() {
    // The two cohoms differ exactly when 0 < x < y.
    let r = verify_subcategory_cohom_differs(8).unwrap();
    assert_eq!(r.witnesses.len(), 28);
    assert!(r.witnesses.iter().all(|&(x, y, _, _)| 0 < x && x < y));
    assert!(r.witnesses.contains(&(1, 2, 0b11, 0b10)));
}

#[test]
fn adjunction_counts_for_n8() {
    let p = MaxPoset::new(8).unwrap();
    let t = searched_p_table(&p).unwrap();
    assert_eq!(check_adjunction_counts(&p.cat, &t), Ok(9 * 9 * 9));
    let c = SubsetCategory::new(8).unwrap();
    let t = relative_adjunction_with_parameter(&c.cat, &c.downsets(), TieBreak::Ascending).unwrap();
    assert_eq!(check_adjunction_counts(&c.cat, &t), Ok(9 * 9 * 256));
}

#[test]
fn removing_a_singleton_kills_the_cohom() {
    let masks = [0b000, 0b001, 0b010, 0b011, 0b101, 0b110, 0b111];
    let fam = union_family(&masks).unwrap();
    let all: Vec<usize> = (0..masks.len()).collect();
    assert!(relative_adjunction_with_parameter(&fam, &all, TieBreak::Ascending).is_none());
    assert!(union_family(&[0b001, 0b010]).is_err());
    assert!(union_family(&[0b000, 0b001, 0b010]).is_err());
}

#[test]
fn ground_set_limit() {
    assert!(SubsetCategory::new(MAX_GROUND).is_ok());
    assert!(SubsetCategory::new(MAX_GROUND + 1).is_err());
    assert!(verify_subcategory_cohom_differs(MAX_GROUND + 1).is_err());
}

#[test]
fn rendered_tables() {
    let expected = "\
cohom_P(x,y)
  x\\y  0  1  2
     0  0  1  2
     1  0  0  2
     2  0  0  0

cohom_C(D_x,D_y)
  x\\y      0      1      2
     0     {}    {1}  {1,2}
     1     {}     {}    {2}
     2     {}     {}     {}
";
    assert_eq!(render_tables(2), expected);
}

proptest! {
    #[test]
    fn witness_count_is_n_choose_2(n in 0usize..=MAX_GROUND) {
        let r = verify_subcategory_cohom_differs(n).unwrap();
        prop_assert_eq!(r.witnesses.len(), binom(n, 2));
        for (x, y, p, c) in r.witnesses {
            prop_assert_eq!(p, SubsetCategory::downset(y));
            prop_assert_eq!(c, SubsetCategory::downset(y) & !SubsetCategory::downset(x));
        }
    }

    #[test]
    fn max_poset_cohom_is_the_least_cover(n in 1usize..10) {
        // cohom(x, y) is the least c with y ≤ max(c, x).
        let p = MaxPoset::new(n).unwrap();
        let t = searched_p_table(&p).unwrap();
        for x in 0..=n {
            for y in 0..=n {
                let least = (0..=n).find(|&c| y <= c.max(x)).unwrap();
                prop_assert_eq!(t.get(x, y).unwrap().0, least);
            }
        }
        prop_assert_eq!(check_adjunction_counts(&p.cat, &t), Ok((n + 1).pow(3)));
    }

    #[test]
    fn downset_cohom_in_small_ground_sets(n in 1usize..5) {
        let c = SubsetCategory::new(n).unwrap();
        prop_assert_eq!(c.cat.objects(), 1 << n);
        prop_assert!(check_downset_table(&c).unwrap().passed());
    }
}

#[test]
fn trusted_constructions_pass_full_validation() {
    use manin_kit::fincat::{Monoidal, ThinCategory};
    let p = MaxPoset::new(5).unwrap();
    let checked = ThinCategory::from_fn(6, |x, y| x <= y).unwrap().with_tensor((0..36).map(|i| (i / 6).max(i % 6)).collect(), 0).unwrap();
    let c = SubsetCategory::new(4).unwrap();
    let checked_c = ThinCategory::from_fn(16, |x, y| x & !y == 0).unwrap().with_tensor((0..256).map(|i| (i / 16) | (i % 16)).collect(), 0).unwrap();
    for (a, b, n) in [(&p.cat, &checked, 6), (&c.cat, &checked_c, 16)] {
        for x in 0..n {
            for y in 0..n {
                assert_eq!(a.leq(x, y), b.leq(x, y));
                assert_eq!(a.tensor(x, y), b.tensor(x, y));
            }
        }
        assert_eq!(a.unit(), b.unit());
    }
}

mod common;

use bitsudoku::smallset::{bit_value, power2, SmallSet, WORD_BITS};
use common::NaiveSet;
use proptest::prelude::*;

const M: u32 = 8;

#[test]
fn exhaustive_binary_ops_agree_with_lists() {
    for a in 0..(1u32 << M) {
        let sa = SmallSet::from_bits(a, M).unwrap();
        let na = NaiveSet::from_word(a, M);
        assert_eq!(sa.cardinality() as usize, na.items.len());
        assert_eq!(sa.elements().collect::<Vec<_>>(), na.items);
        for d in 1..=M {
            assert_eq!(sa.contains(d).unwrap(), na.contains(d));
            assert_eq!(sa.insert(d).unwrap().bits(), na.insert(d).to_word());
            assert_eq!(sa.remove(d).unwrap().bits(), na.remove(d).to_word());
        }
        for b in 0..(1u32 << M) {
            let sb = SmallSet::from_bits(b, M).unwrap();
            let nb = NaiveSet::from_word(b, M);
            assert_eq!(
                sa.intersect(sb).unwrap().bits(),
                na.intersect(&nb).to_word()
            );
            assert_eq!(sa.union(sb).unwrap().bits(), na.union(&nb).to_word());
            assert_eq!(
                sa.difference(sb).unwrap().bits(),
                na.difference(&nb).to_word()
            );
            assert_eq!(sa.equals(sb).unwrap(), na == nb);
            assert_eq!(sa.is_subset(sb).unwrap(), na.is_subset(&nb));
        }
    }
}

fn set_in(cap: u32) -> impl Strategy<Value = SmallSet> {
    let mask = if cap == 32 {
        u32::MAX
    } else {
        (1u32 << cap) - 1
    };
    any::<u32>().prop_map(move |w| SmallSet::from_bits(w & mask, cap).unwrap())
}

fn triple() -> impl Strategy<Value = (SmallSet, SmallSet, SmallSet)> {
    (1u32..=25).prop_flat_map(|cap| (set_in(cap), set_in(cap), set_in(cap)))
}

fn high_bits_clear(s: SmallSet) -> bool {
    s.capacity() == WORD_BITS || s.bits() >> s.capacity() == 0
}

proptest! {
    #[test]
    fn union_and_intersection_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.union(b).unwrap(), b.union(a).unwrap());
        prop_assert_eq!(a.intersect(b).unwrap(), b.intersect(a).unwrap());
        prop_assert_eq!(a.union(b).unwrap().union(c).unwrap(), a.union(b.union(c).unwrap()).unwrap());
        prop_assert_eq!(
            a.intersect(b).unwrap().intersect(c).unwrap(),
            a.intersect(b.intersect(c).unwrap()).unwrap()
        );
    }

    #[test]
    fn difference_is_intersection_with_complement((a, b, _c) in triple()) {
        prop_assert_eq!(a.difference(b).unwrap(), a.intersect(b.complement()).unwrap());
        prop_assert_eq!(a - b, a.difference(b).unwrap());
    }

    #[test]
    fn subset_iff_intersection_is_self((a, b, _c) in triple()) {
        prop_assert_eq!(a.is_subset(b).unwrap(), a.intersect(b).unwrap().equals(a).unwrap());
    }

    #[test]
    fn insert_remove_laws((a, _b, _c) in triple(), pick in 0u32..32) {
        let d = pick % a.capacity() + 1;
        prop_assert_eq!(a.insert(d).unwrap().remove(d).unwrap(), a.remove(d).unwrap());
        prop_assert_eq!(a.remove(d).unwrap().insert(d).unwrap(), a.insert(d).unwrap());
        prop_assert!(!a.remove(d).unwrap().contains(d).unwrap());
        prop_assert!(a.insert(d).unwrap().contains(d).unwrap());
    }

    #[test]
    fn results_stay_inside_universe((a, b, _c) in triple(), pick in 0u32..32) {
        let d = pick % a.capacity() + 1;
        for s in [
            a.union(b).unwrap(),
            a.intersect(b).unwrap(),
            a.difference(b).unwrap(),
            a.insert(d).unwrap(),
            a.remove(d).unwrap(),
            a.complement(),
            SmallSet::full(a.capacity()).unwrap(),
        ] {
            prop_assert!(high_bits_clear(s), "{:?}", s);
        }
    }

    #[test]
    fn elements_ascending_and_complete(a in (1u32..=32).prop_flat_map(set_in)) {
        let xs: Vec<u32> = a.elements().collect();
        prop_assert!(xs.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(xs.len() as u32, a.cardinality());
        prop_assert_eq!(SmallSet::from_elements(a.capacity(), xs).unwrap(), a);
    }
}

#[test]
fn power2_doubles_and_isolates_one_bit() {
    for k in 1..WORD_BITS {
        assert_eq!(power2(k).unwrap(), 2 * power2(k - 1).unwrap());
    }
    for k in 0..WORD_BITS {
        let p = power2(k).unwrap();
        for j in 0..WORD_BITS {
            assert_eq!(bit_value(p, j).unwrap(), u32::from(j == k));
        }
    }
}

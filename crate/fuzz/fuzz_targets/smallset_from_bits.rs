#![no_main]

use bitsudoku::SmallSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u32, u32, u8, u8)| {
    let (a, b, cap, d) = input;
    let cap = u32::from(cap % 33);
    let (Ok(x), Ok(y)) = (SmallSet::from_bits(a, cap), SmallSet::from_bits(b, cap)) else {
        return;
    };
    let d = u32::from(d) % cap + 1;
    let diff = x.difference(y).unwrap();
    assert_eq!(diff, x.intersect(y.complement()).unwrap());
    assert_eq!(
        x.remove(d).unwrap().insert(d).unwrap(),
        x.insert(d).unwrap()
    );
    assert!(!x.remove(d).unwrap().contains(d).unwrap());
    assert_eq!(x.is_subset(y).unwrap(), x.intersect(y).unwrap() == x);
    assert_eq!(x.elements().count() as u32, x.cardinality());
});

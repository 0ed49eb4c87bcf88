//! Sieve of Eratosthenes over a multi-word bit array.

/// A fixed-length array of bits packed into `u64` words; bit `t` is bit
/// `t % 64` of word `t / 64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitArray {
    words: Vec<u64>,
    len: usize,
}

const WORD: usize = u64::BITS as usize;

impl BitArray {
    pub fn zeros(len: usize) -> Self {
        BitArray {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut words = vec![u64::MAX; len.div_ceil(WORD)];
        let tail = len % WORD;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        BitArray { words, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, t: usize) -> bool {
        assert!(t < self.len, "bit {t} out of range for length {}", self.len);
        self.words[t / WORD] & (1 << (t % WORD)) != 0
    }

    #[inline]
    pub fn set(&mut self, t: usize) {
        assert!(t < self.len, "bit {t} out of range for length {}", self.len);
        self.words[t / WORD] |= 1 << (t % WORD);
    }

    #[inline]
    pub fn clear(&mut self, t: usize) {
        assert!(t < self.len, "bit {t} out of range for length {}", self.len);
        self.words[t / WORD] &= !(1 << (t % WORD));
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let low = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + low)
            })
        })
    }
}

/// Every prime `p ≤ limit`, ascending. `0` and `1` are not prime.
pub fn primes_up_to(limit: usize) -> Vec<usize> {
    if limit < 2 {
        return Vec::new();
    }
    let mut is_prime = BitArray::ones(limit + 1);
    is_prime.clear(0);
    is_prime.clear(1);
    let mut p = 2;
    while p * p <= limit {
        if is_prime.get(p) {
            let mut multiple = p * p;
            while multiple <= limit {
                is_prime.clear(multiple);
                multiple += p;
            }
        }
        p += 1;
    }
    is_prime.iter_ones().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds() {
        assert!(primes_up_to(0).is_empty());
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn bit_array_tail_is_clear() {
        for len in [0, 1, 63, 64, 65, 130] {
            let a = BitArray::ones(len);
            assert_eq!(a.count_ones(), len);
            assert_eq!(a.iter_ones().count(), len);
        }
        let mut a = BitArray::zeros(100);
        a.set(64);
        a.set(3);
        assert_eq!(a.iter_ones().collect::<Vec<_>>(), vec![3, 64]);
        a.clear(64);
        assert!(!a.get(64));
        assert_eq!(a.words().len(), 2);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn bit_array_bounds() {
        BitArray::zeros(10).get(10);
    }
}

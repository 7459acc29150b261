//! Fixed-length bit vectors used as membership windows.
//!
//! Bits past `len` in the last word are always zero so that derived equality
//! and hashing are structural.

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub(crate) fn ones(len: usize) -> Self {
        let mut b = Bits {
            words: vec![u64::MAX; len.div_ceil(64)],
            len,
        };
        b.clear_tail();
        b
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        i < self.len && (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }


    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub(crate) fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    /// Index of the last zero bit, if any.
    pub(crate) fn last_zero(&self) -> Option<usize> {
        (0..self.len).rev().find(|&i| !self.get(i))
    }

    /// `self |= other << shift`, truncated to `self.len()`.
    pub(crate) fn or_shifted(&mut self, other: &Bits, shift: usize) {
        let word_shift = shift >> 6;
        let bit_shift = shift & 63;
        for (si, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = si + word_shift;
            if lo >= self.words.len() {
                break;
            }
            self.words[lo] |= w << bit_shift;
            if bit_shift != 0 && lo + 1 < self.words.len() {
                self.words[lo + 1] |= w >> (64 - bit_shift);
            }
        }
        self.clear_tail();
    }

    /// Copy of bits `[start, start + len)`; positions past the end read as `fill`.
    pub(crate) fn slice(&self, start: usize, len: usize, fill: bool) -> Bits {
        let mut out = Bits::zeros(len);
        for i in 0..len {
            let j = start + i;
            let bit = if j < self.len { self.get(j) } else { fill };
            if bit {
                out.set(i);
            }
        }
        out
    }

    fn clear_tail(&mut self) {
        let r = self.len & 63;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_or_crosses_word_boundaries() {
        let mut src = Bits::zeros(70);
        src.set(0);
        src.set(63);
        src.set(69);
        let mut dst = Bits::zeros(140);
        dst.or_shifted(&src, 5);
        assert_eq!(dst.iter_ones().collect::<Vec<_>>(), vec![5, 68, 74]);
        let mut small = Bits::zeros(70);
        small.or_shifted(&src, 5);
        assert_eq!(small.iter_ones().collect::<Vec<_>>(), vec![5, 68]);
    }

    #[test]
    fn ones_has_clean_tail() {
        let b = Bits::ones(65);
        assert_eq!(b.iter_ones().count(), 65);
        assert_eq!(b, b.slice(0, 65, false));
        assert_eq!(b.last_zero(), None);
    }
}

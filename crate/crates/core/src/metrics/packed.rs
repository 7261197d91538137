use crate::gf2e::{F16, MUL};

const LOW: u64 = 0x1111_1111_1111_1111;

/// A GF(16) vector packed 16 coordinates to a word, coordinate `i` in
/// nibble `i % 16` of word `i / 16`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PackedVec {
    len: usize,
    words: Vec<u64>,
}

impl PackedVec {
    pub fn zero(len: usize) -> PackedVec {
        PackedVec { len, words: vec![0; len.div_ceil(16)] }
    }

    pub fn from_slice(v: &[F16]) -> PackedVec {
        let mut p = PackedVec::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            p.words[i / 16] |= (c.bits() as u64) << (4 * (i % 16));
        }
        p
    }

    pub fn to_vec(&self) -> Vec<F16> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> F16 {
        F16::from_bits((self.words[i / 16] >> (4 * (i % 16)) & 0xf) as u8)
    }

    pub fn add_assign(&mut self, o: &PackedVec) {
        self.words.iter_mut().zip(&o.words).for_each(|(a, b)| *a ^= b);
    }

    pub fn scale(&self, c: F16) -> PackedVec {
        let row = &MUL[c.bits() as usize];
        let mut out = PackedVec::zero(self.len);
        for (o, &w) in out.words.iter_mut().zip(&self.words) {
            for s in 0..16 {
                *o |= (row[(w >> (4 * s) & 0xf) as usize] as u64) << (4 * s);
            }
        }
        out
    }

    pub fn weight(&self) -> usize {
        self.words
            .iter()
            .map(|&w| {
                let y = w | w >> 1;
                ((y | y >> 2) & LOW).count_ones() as usize
            })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

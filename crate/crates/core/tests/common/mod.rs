#![allow(dead_code)]

use itertools::Itertools;
use projdec::bitlin::BitVector;
use projdec::decoder::DecoderContext;
use projdec::golden::{PublishedCode, PUBLISHED};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn context(code: &PublishedCode) -> DecoderContext {
    DecoderContext::new(code.c4(), code.variant).unwrap()
}

pub fn contexts() -> Vec<(&'static str, DecoderContext)> {
    PUBLISHED.iter().map(|c| (c.name, context(c))).collect()
}

/// Every error pattern of weight at most `t`, lightest first.
pub fn patterns(n: usize, t: usize) -> Vec<BitVector> {
    (0..=t)
        .flat_map(|w| (0..n).combinations(w))
        .map(|pos| BitVector::from_positions(&pos, n))
        .collect()
}

/// The zero codeword followed by `count` seeded random codewords.
pub fn sample_codewords(ctx: &DecoderContext, count: usize, seed: u64) -> Vec<BitVector> {
    let code = ctx.code();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![BitVector::zeros(code.n())];
    for _ in 0..count {
        let msg = BitVector::from_bits(rng.gen::<u64>() & ((1 << code.k()) - 1), code.k()).unwrap();
        out.push(code.encode(&msg).unwrap());
    }
    out
}

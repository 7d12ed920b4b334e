use std::io::Write;
use std::time::Instant;

use conic_mori::kronecker::{KroneckerModule, LinearForm};
use conic_mori::linalg::{rat, ratio};
use conic_mori::{Rat, RatMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational, possibly zero.
pub fn small_rat(r: &mut impl Rng) -> Rat {
    ratio(r.gen_range(-6..=6), r.gen_range(1..=4))
}

pub fn nonzero_rat(r: &mut impl Rng) -> Rat {
    loop {
        let x = small_rat(r);
        if x != rat(0) {
            return x;
        }
    }
}

pub fn positive_rat(r: &mut impl Rng) -> Rat {
    ratio(r.gen_range(1..=9), r.gen_range(1..=5))
}

pub fn linear(r: &mut impl Rng, n: usize) -> LinearForm {
    LinearForm::new((0..=n).map(|_| small_rat(r)).collect())
}

/// `k` linear forms that are linearly independent.
pub fn independent(r: &mut impl Rng, n: usize, k: usize) -> Vec<LinearForm> {
    loop {
        let forms: Vec<LinearForm> = (0..k).map(|_| linear(r, n)).collect();
        let m = RatMatrix::from_rows(forms.iter().map(|f| f.coeffs().to_vec()).collect());
        if m.rank() == k {
            return forms;
        }
    }
}

/// Random element of `SL₂(ℚ)` as a product of elementary and diagonal factors.
pub fn sl2(r: &mut impl Rng) -> [[Rat; 2]; 2] {
    let mul = |a: &[[Rat; 2]; 2], b: &[[Rat; 2]; 2]| -> [[Rat; 2]; 2] {
        std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
    };
    let mut g = [[rat(1), rat(0)], [rat(0), rat(1)]];
    for _ in 0..3 {
        let x = small_rat(r);
        let e = if r.gen_bool(0.5) {
            [[rat(1), x], [rat(0), rat(1)]]
        } else {
            [[rat(1), rat(0)], [x, rat(1)]]
        };
        g = mul(&g, &e);
    }
    let d = nonzero_rat(r);
    let inv = rat(1) / &d;
    mul(&g, &[[d, rat(0)], [rat(0), inv]])
}

pub fn conjugate(m: &KroneckerModule, r: &mut impl Rng) -> KroneckerModule {
    m.transform(&sl2(r), &sl2(r)).expect("SL2 is invertible")
}

pub fn module(e: [[LinearForm; 2]; 2]) -> KroneckerModule {
    KroneckerModule::new(e).expect("valid module")
}

/// Prints one report line straight to stdout, bypassing the harness capture so
/// it shows for passing criteria too.
pub fn report(criterion: u32, ok: bool, started: Instant, detail: &str) {
    let line = format!(
        "criterion {criterion}: {} ({detail}; {:.2}s)\n",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64()
    );
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
}

//! Monte Carlo driver: seeded per-trial substreams with order-independent
//! count merging, so the result is identical for any worker count.

use perco_dual_core::{find_crossing, random_config, CrossingSpec, Rect};

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The substream seed of one trial; mixing keeps neighboring trials
/// uncorrelated while staying reproducible for any sharding.
fn trial_seed(seed: u64, trial: u64) -> u64 {
    splitmix64(seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1))
}

fn count_range(rect: &Rect, p: f64, seed: u64, range: std::ops::Range<u64>) -> [u64; 8] {
    let specs = CrossingSpec::all();
    let mut counts = [0u64; 8];
    for trial in range {
        let cfg = random_config(rect.width(), rect.height(), p, trial_seed(seed, trial))
            .expect("probability validated by the caller");
        for (i, spec) in specs.iter().enumerate() {
            if find_crossing(&cfg, rect, *spec).is_some() {
                counts[i] += 1;
            }
        }
    }
    counts
}

/// Evaluate all eight events over `trials` seeded windows, sharded across
/// `workers` threads.
pub fn run(
    rect: &Rect,
    p: f64,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Vec<(CrossingSpec, u64)> {
    let workers = workers.min(trials as usize).max(1);
    let chunk = trials.div_ceil(workers as u64);
    let mut totals = [0u64; 8];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w as u64 * chunk;
                let hi = (lo + chunk).min(trials);
                scope.spawn(move || count_range(rect, p, seed, lo..hi))
            })
            .collect();
        for handle in handles {
            let counts = handle.join().expect("worker panicked");
            for (t, c) in totals.iter_mut().zip(counts) {
                *t += c;
            }
        }
    });
    CrossingSpec::all().into_iter().zip(totals).collect()
}

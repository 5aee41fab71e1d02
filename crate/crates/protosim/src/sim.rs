use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{ProtocolConfig, SimMode};

/// Aggregate simulator output.
#[derive(Debug, Clone, Serialize)]
pub struct SimStats {
    pub trials: u64,
    pub successes: u64,
    /// Per-cycle protocol success probability.
    pub p_s: f64,
    /// Loop-2 success probability given Loop-2 entry (repeater only).
    pub p2: f64,
    /// Successes by Loop-2 attempt index; entry k-1 counts successes at the
    /// k-th memory attempt. Sums to the number of Loop-2 successes.
    pub k_histogram: Vec<u64>,
    /// Successes per unit active time (initialization excluded), Hz.
    pub active_rate_hz: f64,
    /// Successes per unit total time (initialization included), Hz.
    pub absolute_rate_hz: f64,
    /// Memory enhancement factor alpha = alpha_max * P2.
    pub alpha: f64,
    /// Maximum memory enhancement factor (P2 = 1 limit).
    pub alpha_max: f64,
    /// Mean memory storage time before the swap among Loop-2 successes, s.
    pub mean_storage_time_s: f64,
}

/// Integer event counts; all times are reconstructed as counts times fixed
/// slot durations, so aggregation is exact and order-independent.
#[derive(Debug, Clone)]
struct Accum {
    successes: u64,
    loop1_slots: u64,
    loop2_slots: u64,
    loop2_entries: u64,
    loop2_successes: u64,
    storage_slots: u64,
    k_histogram: Vec<u64>,
}

impl Accum {
    fn new(k_bins: usize) -> Self {
        Self {
            successes: 0,
            loop1_slots: 0,
            loop2_slots: 0,
            loop2_entries: 0,
            loop2_successes: 0,
            storage_slots: 0,
            k_histogram: vec![0; k_bins],
        }
    }

    fn merge(mut self, other: Accum) -> Accum {
        self.successes += other.successes;
        self.loop1_slots += other.loop1_slots;
        self.loop2_slots += other.loop2_slots;
        self.loop2_entries += other.loop2_entries;
        self.loop2_successes += other.loop2_successes;
        self.storage_slots += other.storage_slots;
        for (a, b) in self.k_histogram.iter_mut().zip(&other.k_histogram) {
            *a += b;
        }
        self
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// One repeater protocol cycle.
fn run_repeater_trial(cfg: &ProtocolConfig, rng: &mut ChaCha8Rng, acc: &mut Accum) {
    let mut first: Option<(bool, u32)> = None; // (arm A detected, slot index)
    for slot in 1..=cfg.loop1_max {
        acc.loop1_slots += 1;
        let a = rng.gen_bool(cfg.p_a1);
        let b = rng.gen_bool(cfg.p_b1);
        if a && b {
            // Both photons heralded in the same slot: swap immediately.
            acc.successes += 1;
            return;
        }
        if a || b {
            first = Some((a, slot));
            break;
        }
    }
    let Some((a_first, _)) = first else {
        return; // Loop 1 exhausted; cycle fails.
    };
    acc.loop2_entries += 1;
    let p = if a_first { cfg.p_b2 } else { cfg.p_a2 };
    for k in 1..=cfg.loop2_max {
        acc.loop2_slots += 1;
        if rng.gen_bool(p) {
            acc.successes += 1;
            acc.loop2_successes += 1;
            acc.storage_slots += k as u64;
            acc.k_histogram[k as usize - 1] += 1;
            return;
        }
    }
}

/// One direct-transmission cycle: attempts until a photon is detected or the
/// loop cap is exhausted.
fn run_direct_trial(cfg: &ProtocolConfig, rng: &mut ChaCha8Rng, acc: &mut Accum) {
    for _ in 1..=cfg.loop1_max {
        acc.loop1_slots += 1;
        let a = rng.gen_bool(cfg.p_a1);
        let b = rng.gen_bool(cfg.p_b1);
        if a || b {
            acc.successes += 1;
            return;
        }
    }
}

fn simulate(cfg: &ProtocolConfig, trials: u64, seed: u64) -> SimStats {
    assert!(trials > 0, "at least one trial required");
    cfg.validate().expect("invalid protocol configuration");
    let k_bins = if cfg.mode == SimMode::Repeater { cfg.loop2_max as usize } else { 0 };

    const CHUNK: u64 = 4096;
    let chunks: Vec<u64> = (0..trials.div_ceil(CHUNK)).collect();
    let acc = chunks
        .par_iter()
        .map(|&chunk| {
            let mut acc = Accum::new(k_bins);
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(trials);
            for trial in lo..hi {
                let mut rng = trial_rng(seed, trial);
                match cfg.mode {
                    SimMode::Repeater => run_repeater_trial(cfg, &mut rng, &mut acc),
                    SimMode::Direct => run_direct_trial(cfg, &mut rng, &mut acc),
                }
            }
            acc
        })
        .reduce(|| Accum::new(k_bins), Accum::merge);

    // Direct configuration: photons travel the full length, so a slot waits
    // two one-way heralding times.
    let (slot1, slot2) = match cfg.mode {
        SimMode::Repeater => (cfg.slot1(), cfg.slot2()),
        SimMode::Direct => (cfg.t_attempt_loop1 + 2.0 * cfg.t_wait, 0.0),
    };
    let active_time = acc.loop1_slots as f64 * slot1
        + acc.loop2_slots as f64 * slot2
        + if cfg.mode == SimMode::Repeater {
            acc.successes as f64 * cfg.t_swap
        } else {
            0.0
        };
    let total_time = active_time + trials as f64 * cfg.t_init;

    let p2 = if acc.loop2_entries > 0 {
        acc.loop2_successes as f64 / acc.loop2_entries as f64
    } else {
        0.0
    };
    let (alpha, alpha_max) = if cfg.mode == SimMode::Repeater && cfg.p_a1 > 0.0 && cfg.p_b1 > 0.0 {
        enhancement_factors(cfg.p_a1, cfg.p_b1, p2)
    } else {
        (0.0, 0.0)
    };
    SimStats {
        trials,
        successes: acc.successes,
        p_s: acc.successes as f64 / trials as f64,
        p2,
        k_histogram: acc.k_histogram,
        active_rate_hz: acc.successes as f64 / active_time,
        absolute_rate_hz: acc.successes as f64 / total_time,
        alpha,
        alpha_max,
        mean_storage_time_s: if acc.loop2_successes > 0 {
            acc.storage_slots as f64 * slot2 / acc.loop2_successes as f64
        } else {
            0.0
        },
    }
}

/// Monte-Carlo simulation of the repeater protocol.
pub fn simulate_repeater(cfg: &ProtocolConfig, trials: u64, seed: u64) -> SimStats {
    assert_eq!(cfg.mode, SimMode::Repeater, "repeater mode required");
    simulate(cfg, trials, seed)
}

/// Monte-Carlo simulation of the direct-transmission configuration.
pub fn simulate_direct(cfg: &ProtocolConfig, trials: u64, seed: u64) -> SimStats {
    assert_eq!(cfg.mode, SimMode::Direct, "direct mode required");
    simulate(cfg, trials, seed)
}

/// Memory enhancement factors: alpha_max = (pA + pB)/(2 pA pB), alpha =
/// alpha_max * P2.
pub fn enhancement_factors(p_a1: f64, p_b1: f64, p2: f64) -> (f64, f64) {
    assert!(p_a1 > 0.0 && p_b1 > 0.0, "zero loop-1 probability");
    let alpha_max = (p_a1 + p_b1) / (2.0 * p_a1 * p_b1);
    (alpha_max * p2, alpha_max)
}

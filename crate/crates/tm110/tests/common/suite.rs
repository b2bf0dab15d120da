//! The five randomized/exhaustive property checks shared between the
//! property tests (one test per check) and the acceptance gate (which times
//! the whole batch). Each panics on violation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use tm110::machine::{
    moves_left, next_state, write_symbol, HeadState, TapeZones, TmConfiguration, TmTape,
};
use tm110::rule110::{local_rule, local_rule_causality, step_wrapped, wrapped_run};
use tm110::verifier::{fuzz_verify, FuzzConfig};
use tm110::words::{Bit, BitWord, Sym, SymWord};

pub fn local_rule_table_matches_causality_form() {
    for l in [Bit::Zero, Bit::One] {
        for c in [Bit::Zero, Bit::One] {
            for r in [Bit::Zero, Bit::One] {
                assert_eq!(
                    local_rule(l, c, r),
                    local_rule_causality(l, c, r),
                    "neighborhood {l:?} {c:?} {r:?}"
                );
            }
        }
    }
}

fn random_bits(rng: &mut impl Rng, len: usize) -> BitWord {
    (0..len)
        .map(|_| if rng.gen::<bool>() { Bit::One } else { Bit::Zero })
        .collect()
}

/// Every wrapped run repeats a row within 2^n steps, the reported onset and
/// period describe the *first* repetition, and the recorded rows really are
/// the evolution.
pub fn wrapped_runs_become_periodic(words: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..words {
        let n = rng.gen_range(1..=12);
        let w = random_bits(&mut rng, n);
        let run = wrapped_run(&w, None).unwrap();
        let beta = run.beta();
        assert_eq!(beta, run.alpha() + run.delta());
        assert!(beta <= 1 << n, "β exceeds 2^n for {w}");
        assert_eq!(run.rows().len(), beta);

        let mut distinct = HashSet::new();
        for (t, row) in run.rows().iter().enumerate() {
            assert!(distinct.insert(row.to_string()), "row {t} repeats early");
            if t + 1 < beta {
                assert_eq!(&step_wrapped(row), &run.rows()[t + 1], "row {}", t + 1);
            }
        }
        assert_eq!(step_wrapped(&run.rows()[beta - 1]), run.rows()[run.alpha()]);
    }
}

fn random_syms(rng: &mut impl Rng, len: usize) -> SymWord {
    const ALPHABET: [Sym; 5] = [Sym::Zero, Sym::MarkedZero, Sym::Unknown, Sym::MarkedOne, Sym::One];
    (0..len).map(|_| ALPHABET[rng.gen_range(0..5)]).collect()
}

/// `reduce` returns the shortest word whose repetition rebuilds the input —
/// checked against a brute-force scan over all divisor-length prefixes.
pub fn reduce_matches_brute_force(words: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for case in 0..words {
        let len = rng.gen_range(1..=64);
        // bias half the cases toward actually-periodic words
        let w = if case % 2 == 0 {
            let piece_len = rng.gen_range(1..=8);
            let piece = random_syms(&mut rng, piece_len);
            let reps = len / piece.len().max(1) + 1;
            let long = piece.repeat(reps);
            long.split_at(len.min(long.len())).0
        } else {
            random_syms(&mut rng, len)
        };
        let brute = (1..=w.len())
            .find(|&p| w.len() % p == 0 && w.split_at(p).0.repeat(w.len() / p) == w)
            .expect("p = len always rebuilds w");
        let reduced = w.reduce();
        assert_eq!(reduced.len(), brute, "reduce length for {w}");
        assert_eq!(reduced.repeat(w.len() / brute), w, "reduce rebuilds {w}");
    }
}

/// The seeded fuzz campaign over random (X, I, Y) triples reports a pass for
/// every case.
pub fn fuzz_verification_all_pass() {
    let summary = fuzz_verify(&FuzzConfig::new(42, 200, 40));
    assert_eq!(summary.cases, 200);
    assert_eq!(summary.passes, 200);
    assert!(summary.failures.is_empty(), "{:?}", summary.failures);
    assert!(summary.all_passed());
}

/// One machine step writes exactly one cell (the head's), moves the head one
/// cell in the direction the read symbol dictates, and carries iff the read
/// symbol was a one — over random configurations.
pub fn machine_steps_touch_one_cell(configs: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..configs {
        let lens = [
            rng.gen_range(1..=4),
            rng.gen_range(0..=3),
            rng.gen_range(0..=5),
            rng.gen_range(0..=3),
            rng.gen_range(1..=4),
        ];
        let zones = TapeZones {
            left_seed: random_syms(&mut rng, lens[0]),
            left_stem: random_syms(&mut rng, lens[1]),
            core: random_syms(&mut rng, lens[2]),
            right_stem: random_syms(&mut rng, lens[3]),
            right_seed: random_syms(&mut rng, lens[4]),
        };
        let head = rng.gen_range(-8..=8);
        let state = if rng.gen::<bool>() {
            HeadState::Carry
        } else {
            HeadState::NoCarry
        };
        let mut cfg = TmConfiguration {
            tape: TmTape::new(zones),
            head,
            state,
        };

        let window: Vec<Sym> = (head - 12..=head + 12).map(|c| cfg.tape.at(c)).collect();
        let read = cfg.tape.at(head);
        cfg.step();

        assert_eq!(cfg.head, head + if moves_left(read) { -1 } else { 1 });
        assert_eq!(cfg.state, next_state(read));
        assert_eq!(
            cfg.state == HeadState::Carry,
            read == Sym::One || read == Sym::MarkedOne
        );
        for (idx, c) in (head - 12..=head + 12).enumerate() {
            let want = if c == head {
                write_symbol(state, read)
            } else {
                window[idx]
            };
            assert_eq!(cfg.tape.at(c), want, "cell {c} after a step at {head}");
        }
    }
}

//! Frozen expected values for the worked examples exercised by the test
//! suite. Extracted once from independently verified simulations; do not
//! edit by hand.

#![allow(dead_code)]

pub mod suite;

// --- 6-wrapped run of 000101 ---
pub const RUN_000101_ALPHA: usize = 3;
pub const RUN_000101_DELTA: usize = 9;
pub const RUN_000101_MATRIX: [&str; 12] = [
    "000101",
    "001111",
    "011001",
    "111011",
    "001110",
    "011010",
    "111110",
    "100011",
    "100110",
    "101111",
    "111000",
    "101001",
];

pub const TRAJ_000101_PREFIX: [(usize, usize); 8] = [(0, 5), (0, 4), (1, 2), (1, 1), (2, 5), (2, 4), (3, 2), (3, 1)];
pub const TRAJ_000101_START: usize = 7;
pub const TRAJ_000101_PERIOD: usize = 21;
pub const TRAJ_000101_SYMBOLS_PREFIX: &str = "10101011111000";
pub const TRAJ_000101_LEFT_NEIGHBOURS_PREFIX: &str = "010000111101011";

// --- seeds and stems ---
pub const LEFT_STEM_000101: &str = "1o01o01i01";
pub const LEFT_SEED_000101: &str = "i0o0i01111";
pub const LEFT_STEM_111011: &str = "";
pub const LEFT_SEED_111011: &str = "11i0o0i011";
pub const RIGHT_STEM_1101: &str = "ii";
pub const RIGHT_SEED_1101: &str = "o1";

// --- CA evolution of <-111011 | 10011 | 1101-> (13 rows) ---
// Row t covers cells -24+t ..= 28-t; the causal-future slice covers -t .. 5+t-1.
pub const CA_FIG_ROWS: [&str; 13] = [
    "11101111101111101111101110011110111011101110111011101",
    "011100011100011100011101011001110111011101110111011",
    "1010011010011010011011111101101110111011101110111",
    "11011111011111011111000011111101110111011101110",
    "111000111000111000100011000011101110111011101",
    "0100110100110100110011100011011101110111011",
    "10111110111110111011010011111011101110111",
    "110001110001110111111011000111011101110",
    "1001101001101110000111100110111011101",
    "01111101111101000110010111110111011",
    "100011100011100111011110001110111",
    "0011010011010110111001001101110",
    "11111011111111110101101111101",
];

pub const CA_FIG_ROW0_START: i64 = -24;
pub const CA_CONE_ROWS: [&str; 13] = [
    "10011",
    "0101100",
    "111111011",
    "11000011111",
    "0010001100001",
    "001100111000110",
    "10111011010011111",
    "0111011111101100011",
    "011011100001111001101",
    "01111101000110010111110",
    "1110001110011101111000111",
    "110100110101101110010011011",
    "11111011111111110101101111101",
];


// --- TM run on tape <-seed(X) stem(X) | 10011 | stem(Y) seed(Y)-> ---
// Snapshot rows cover cells -40 .. 39; head starts at cell 5 in the no-carry state.
pub const THEOREM_TAPE_WINDOW_START: i64 = -40;
pub const THEOREM_INITIAL_TAPE: &str = "11i0o0i01111i0o0i01111i0o0i01111i0o0i01110011iio1o1o1o1o1o1o1o1o1o1o1o1o1o1o1o1o";
pub const TM_LEFT_SWITCH_TIMES: [u64; 13] = [3, 29, 63, 105, 163, 229, 303, 393, 491, 597, 719, 849, 987];

pub const TM_LEFT_SWITCH_CELLS: [i64; 13] = [8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 32];

pub const TM_SNAPSHOT_ROWS: [&str; 13] = [
    "11i0o0i01111i0o0i01111i0o0i01111i0o0i011100111101o1o1o1o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o0i01111i0o0111010110011101o1o1o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o0i01111i00110111111011011101o1o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o0i0111110111110000111111011101o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o01110001110001000110000111011101o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i001101001101001100111000110111011101o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111101111101111101110110100111110111011101o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o011100011100011100011101111110110001110111011101o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0011010011010011010011011100001111001101110111011101o1o1o1o1o1o1o1o",
    "11i0o0i011111011111011111011111011111010001100101111101110111011101o1o1o1o1o1o1o",
    "11i0o0111000111000111000111000111000111001110111100011101110111011101o1o1o1o1o1o",
    "11i00110100110100110100110100110100110101101110010011011101110111011101o1o1o1o1o",
    "1110111110111110111110111110111110111111111101011011111011101110111011101o1o1o1o",
];

pub const TM_RIGHT_SWITCH_TIMES: [u64; 12] = [15, 45, 83, 133, 195, 265, 347, 441, 543, 657, 783, 917];

pub const TM_RIGHT_SWITCH_CELLS: [i64; 12] = [-4, -6, -8, -14, -16, -18, -24, -26, -28, -34, -36, -38];

pub const TM_RIGHT_SWEEP_END_ROWS: [&str; 12] = [
    "11i0o0i01111i0o0i01111i0o0i01111i0o0ii??ioi???iiio1o1o1o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o0i01111i0oi??iiii?ioi??iiio1o1o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o0i01111ioi?ii?????ii?ii??iiio1o1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0o0ii????ii????ioooi?????ii??iiio1o1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111i0oi??iooi??iooiiooi?ioooi??ii??iiio1o1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0i01111ioi?iiioi?iiioi?ioi??iooi?ii??ii??iiio1o1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0o0ii????ii????ii????ii??ii?iiioi????ii??ii??iiio1o1o1o1o1o1o1o1o1o",
    "11i0o0i01111i0oi??iooi??iooi??iooi??ii?????ii?iooi??ii??ii??iiio1o1o1o1o1o1o1o1o",
    "11i0o0i01111ioi?iiioi?iiioi?iiioi?ii??ioooi???ioi?ii??ii??ii??iiio1o1o1o1o1o1o1o",
    "11i0o0ii????ii????ii????ii????ii????iiiooi?ioiii????ii??ii??ii??iiio1o1o1o1o1o1o",
    "11i0oi??iooi??iooi??iooi??iooi??iooi??ioi??ii???iooi??ii??ii??ii??iiio1o1o1o1o1o",
    "11ioi?iiioi?iiioi?iiioi?iiioi?iiioi?iiii?ii??ioiioi?ii??ii??ii??ii??iiio1o1o1o1o",
];

pub const THEOREM_EVENT_COUNT_T12: u64 = 221;
pub const WOLFRAM_EVENT_COUNT_T3: u64 = 44;

// --- 0-background (limited-emulation) run for I = 111011 ---
// M-row i covers cells -(i+1) ..= 6+i; the head sits on the last cell.
pub const WOLFRAM_M_ROWS: [&str; 4] = [
    "01110110",
    "0110111100",
    "011111001000",
    "01100010110000",
];

pub const WOLFRAM_LEFT_SWITCH_TIMES: [u64; 9] = [0, 17, 38, 63, 92, 125, 162, 203, 248];

pub const WOLFRAM_LEFT_SWITCH_CELLS: [i64; 9] = [6, 7, 8, 9, 10, 11, 12, 13, 14];

pub const WOLFRAM_RIGHT_SWITCH_TIMES: [u64; 8] = [8, 27, 50, 77, 108, 143, 182, 225];

pub const WOLFRAM_RIGHT_SWITCH_CELLS: [i64; 8] = [-2, -3, -4, -5, -6, -7, -8, -9];

// Alternating sweep-end rows L0,R0,L1,R1,L2,R2,L3; starts vary per row.
pub const WOLFRAM_INTERLEAVED_STARTS: [i64; 7] = [-1, -2, -2, -3, -3, -4, -4];

pub const WOLFRAM_INTERLEAVED_ROWS: [&str; 7] = [
    "01110110",
    "oi??ii?io",
    "0110111100",
    "oi?ii???ioo",
    "011111001000",
    "oi????ioiiooo",
    "01100010110000",
];

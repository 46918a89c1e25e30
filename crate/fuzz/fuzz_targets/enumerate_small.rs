#![no_main]

use kvcc::enumerate::canonicalize;
use kvcc::oracle::kvcc_bruteforce;
use kvcc::{kvcc_enum, load_edge_list, Variant};
use libfuzzer_sys::fuzz_target;

// First byte picks k in 1..=4; the rest is an edge list. Graphs small enough
// for the oracle must match it under every variant.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else { return };
    let k = usize::from(head % 4) + 1;
    let Ok(g) = load_edge_list(rest) else { return };
    if g.n() > 12 {
        return;
    }
    let mut expected: Vec<Vec<u64>> = kvcc_bruteforce(&g, k)
        .expect("within oracle limit")
        .iter()
        .map(|vs| g.labels_of(vs.as_slice()))
        .collect();
    canonicalize(&mut expected);
    for variant in Variant::ALL {
        let found = kvcc_enum(&g, k, variant).expect("k is positive").components;
        assert_eq!(found, expected, "variant {variant}, k = {k}");
    }
});

#![no_main]

use kvcc::{load_edge_list, write_edge_list, Graph};
use libfuzzer_sys::fuzz_target;

fn labeled_edges(g: &Graph) -> Vec<(u64, u64)> {
    let mut edges: Vec<_> = g.edges().map(|(u, v)| {
        let (a, b) = (g.label(u), g.label(v));
        (a.min(b), a.max(b))
    }).collect();
    edges.sort_unstable();
    edges
}

// Any accepted edge list survives a write and re-read with the same edges.
fuzz_target!(|data: &[u8]| {
    let Ok(g) = load_edge_list(data) else { return };
    let mut text = Vec::new();
    write_edge_list(&g, &mut text).expect("writing to memory");
    let again = load_edge_list(text.as_slice()).expect("written edge list parses");
    assert_eq!(labeled_edges(&g), labeled_edges(&again));
});

#![no_main]

use graph_entropy::graph::distance_profile;
use graph_entropy::io::{parse_edge_list, parse_edge_list_bytes, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(g) = parse_edge_list_bytes(data) else { return };
    let again = parse_edge_list(&write_edge_list(&g)).expect("written edge lists re-parse");
    assert_eq!(again, g);
    if g.order() <= 512 {
        let p = distance_profile(&g);
        assert_eq!(p.sigma.iter().sum::<u64>(), 2 * p.wiener);
    }
});

use oddchrome::classifier;
use oddchrome::coloring::verify_odd;
use oddchrome::io;
use oddchrome::multigraph::named::*;
use oddchrome::oracle::{self, SearchConfig};
use oddchrome::{Error, MultiGraph};

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn oracle_dot(g: &MultiGraph) -> String {
    let r = oracle::chi(g, &SearchConfig::default()).unwrap();
    io::emit_dot(g, Some(&r.coloring))
}

#[test]
fn dot_matches_golden_files() {
    assert_eq!(oracle_dot(&complete(3)), golden("k3.dot"));
    assert_eq!(oracle_dot(&dipole(2)), golden("doubled_edge.dot"));
    let g = subdivided_once(complete_bipartite(3, 3), 0);
    let c = classifier::color_optimal(&g).unwrap();
    assert_eq!(io::emit_dot(&g, Some(&c)), golden("subdivided_k33.dot"));
}

#[test]
fn uncolored_dot_lists_every_edge() {
    let dot = io::emit_dot(&dipole(3), None);
    assert_eq!(dot.matches("0 -- 1").count(), 3);
    assert!(dot.starts_with("graph G {") && dot.ends_with("}\n"));
}

#[test]
fn mel_and_color_files_round_trip() {
    let g = subdivided_once(complete_bipartite(3, 5), 2);
    let text = io::serialize_mel(&g);
    assert_eq!(io::parse_mel(&text).unwrap(), g);

    let c = classifier::color_optimal(&g).unwrap();
    let lines = io::coloring_lines(&g, &c);
    let short: String = lines
        .lines()
        .map(|l| {
            let t: Vec<&str> = l.split_whitespace().collect();
            format!("{} {}\n", t[0], t[3])
        })
        .collect();
    let back = io::parse_colors(&short, g.m()).unwrap();
    assert_eq!(back, c);
    assert!(verify_odd(&g, &back).unwrap());
}

#[test]
fn parse_errors_carry_line_numbers() {
    let err = io::parse_mel("# header\nn 3\ne 0 1\ne 1 7\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    let err = io::parse_colors("0 1\n1 x\n", 2).unwrap_err();
    assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
}

#[test]
fn graph6_reads_standard_strings() {
    let petersen = io::parse_graph6("IheA@GUAo").unwrap();
    assert_eq!((petersen.n(), petersen.m()), (10, 15));
    assert!(petersen.vertices().all(|v| petersen.degree(v) == 3));
    let k33 = io::parse_graph6("EFz_").unwrap();
    assert_eq!((k33.n(), k33.m()), (6, 9));
    assert!(matches!(io::parse_graph6(":Fa@x^"), Err(Error::Unsupported(_))));
}

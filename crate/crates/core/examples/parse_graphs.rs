//! Read the same graph in the three supported text formats and print a
//! summary of each. A file path given on the command line is read too.
//!
//! cargo run --example parse_graphs -- [path]

use std::path::Path;

use clique_swarm::io::{self, GraphFormat};
use clique_swarm::{datasets, summarize, Graph};

fn show(name: &str, g: &Graph) {
    println!("[{name}]\n{}\n", summarize(g));
}

fn main() {
    let karate = datasets::karate();
    show("pajek", &karate);

    let gml = io::parse_gml(datasets::karate_gml_text()).expect("bundled GML parses");
    show("gml", &gml);

    // edge lists carry no vertex count; isolated vertices would be lost
    let text = io::to_edge_list(&karate);
    let back = GraphFormat::EdgeList
        .parse(&text)
        .expect("own output parses");
    show("edge list", &back);

    // the edge list is written by vertex index, so labels of `back` are indices
    let relabeled: Vec<(usize, usize)> = back
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (
                back.label(u).parse::<usize>().unwrap(),
                back.label(v).parse::<usize>().unwrap(),
            );
            (a.min(b), a.max(b))
        })
        .collect();
    let mut round = relabeled;
    round.sort();
    let pairs = karate.edges().to_vec();
    println!("edge list round trip preserves edges: {}", pairs == round);

    if let Some(path) = std::env::args().nth(1) {
        match io::read_graph(Path::new(&path), None) {
            Ok(g) => show(&path, &g),
            Err(e) => eprintln!("{e}"),
        }
    }
}

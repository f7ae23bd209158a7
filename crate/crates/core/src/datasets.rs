//! Social-network benchmark graphs.
//!
//! Zachary's karate club ships with the crate. The other graphs are looked up
//! on disk: download the file from the listed source, unpack it, and put it in
//! the data directory (`$CLIQUE_SWARM_DATA`, or `./data` when unset) under the
//! listed file name.

use std::path::{Path, PathBuf};

use crate::error::Error;
use crate::graph::Graph;
use crate::io::{self, GraphFormat};

const KARATE_NET: &str = include_str!("../data/karate.net");
const KARATE_GML: &str = include_str!("../data/karate.gml");

/// Environment variable naming the directory holding downloaded datasets.
pub const DATA_DIR_ENV: &str = "CLIQUE_SWARM_DATA";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    /// Row id used in result tables (I, II, ...).
    pub id: &'static str,
    pub key: &'static str,
    pub description: &'static str,
    pub nodes: usize,
    /// Edge count as listed in the usual benchmark tables. Files with
    /// multi-edges or arcs may simplify to fewer edges.
    pub listed_edges: usize,
    pub file_name: &'static str,
    pub format: GraphFormat,
    pub source: &'static str,
    bundled: Option<&'static str>,
}

impl Dataset {
    pub fn is_bundled(&self) -> bool {
        self.bundled.is_some()
    }

    /// Load from the bundled copy, or from `data_dir` (falling back to the
    /// environment / `./data`).
    pub fn load(&self, data_dir: Option<&Path>) -> Result<Graph, Error> {
        if let Some(text) = self.bundled {
            return self.format.parse(text).map_err(|e| Error::Dataset {
                name: self.key.into(),
                reason: e.to_string(),
            });
        }
        let path = data_dir
            .map(Path::to_path_buf)
            .unwrap_or_else(default_data_dir)
            .join(self.file_name);
        if !path.exists() {
            return Err(Error::Dataset {
                name: self.key.into(),
                reason: format!(
                    "{} not found; download it from {} and place it there",
                    path.display(),
                    self.source
                ),
            });
        }
        io::read_graph(&path, Some(self.format))
    }
}

pub fn default_data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"))
}

/// Known benchmark graphs. The Slovenian-journals network is left out: its
/// usual edge count is that of a weighted multigraph, not a simple graph.
pub const CATALOG: &[Dataset] = &[
    Dataset {
        id: "I",
        key: "karate",
        description: "Zachary's karate club",
        nodes: 34,
        listed_edges: 78,
        file_name: "karate.net",
        format: GraphFormat::Pajek,
        source: "http://www-personal.umich.edu/~mejn/netdata/karate.zip",
        bundled: Some(KARATE_NET),
    },
    Dataset {
        id: "II",
        key: "adjnoun",
        description: "Common adjectives and nouns in David Copperfield",
        nodes: 112,
        listed_edges: 425,
        file_name: "adjnoun.gml",
        format: GraphFormat::Gml,
        source: "http://www-personal.umich.edu/~mejn/netdata/adjnoun.zip",
        bundled: None,
    },
    Dataset {
        id: "III",
        key: "celegansneural",
        description: "Neural network of the nematode C. elegans",
        nodes: 297,
        listed_edges: 8479,
        file_name: "celegansneural.gml",
        format: GraphFormat::Gml,
        source: "http://www-personal.umich.edu/~mejn/netdata/celegansneural.zip",
        bundled: None,
    },
    Dataset {
        id: "IV",
        key: "dolphins",
        description: "Dolphin social network, Doubtful Sound, New Zealand",
        nodes: 62,
        listed_edges: 159,
        file_name: "dolphins.gml",
        format: GraphFormat::Gml,
        source: "http://www-personal.umich.edu/~mejn/netdata/dolphins.zip",
        bundled: None,
    },
    Dataset {
        id: "V",
        key: "erdos971",
        description: "Erdos collaboration network 971",
        nodes: 472,
        listed_edges: 1314,
        file_name: "Erdos971.net",
        format: GraphFormat::Pajek,
        source: "http://vlado.fmf.uni-lj.si/pub/networks/data/Erdos/Erdos971.net",
        bundled: None,
    },
    Dataset {
        id: "VI",
        key: "erdos991",
        description: "Erdos collaboration network 991",
        nodes: 492,
        listed_edges: 1417,
        file_name: "Erdos991.net",
        format: GraphFormat::Pajek,
        source: "http://vlado.fmf.uni-lj.si/pub/networks/data/Erdos/Erdos991.net",
        bundled: None,
    },
    Dataset {
        id: "VII",
        key: "football",
        description: "World Soccer, Paris 1998",
        nodes: 35,
        listed_edges: 295,
        file_name: "football.net",
        format: GraphFormat::Pajek,
        source: "http://vlado.fmf.uni-lj.si/pub/networks/data/sport/football.htm",
        bundled: None,
    },
    Dataset {
        id: "VIII",
        key: "glossgt",
        description: "Graph and digraph glossary",
        nodes: 72,
        listed_edges: 118,
        file_name: "GlossGT.net",
        format: GraphFormat::Pajek,
        source: "http://vlado.fmf.uni-lj.si/pub/networks/data/dic/Glossary/Glossary.htm",
        bundled: None,
    },
    Dataset {
        id: "X",
        key: "netscience",
        description: "Co-authorship of scientists in network theory and experiments",
        nodes: 1589,
        listed_edges: 1190,
        file_name: "netscience.gml",
        format: GraphFormat::Gml,
        source: "http://www-personal.umich.edu/~mejn/netdata/netscience.zip",
        bundled: None,
    },
    Dataset {
        id: "XI",
        key: "smagri",
        description: "SmaGri citation network",
        nodes: 1059,
        listed_edges: 4919,
        file_name: "SmaGri.net",
        format: GraphFormat::Pajek,
        source: "http://vlado.fmf.uni-lj.si/pub/networks/data/cite/default.htm",
        bundled: None,
    },
    Dataset {
        id: "XII",
        key: "email",
        description: "E-mail interchanges, Univ. Rovira i Virgili, Tarragona",
        nodes: 1133,
        listed_edges: 5451,
        file_name: "email.txt",
        format: GraphFormat::EdgeList,
        source: "http://deim.urv.cat/~alexandre.arenas/data/xarxes/email.zip",
        bundled: None,
    },
];

/// Look up a dataset by key (`karate`) or row id (`I`), case-insensitively.
pub fn find(name: &str) -> Option<&'static Dataset> {
    CATALOG
        .iter()
        .find(|d| d.key.eq_ignore_ascii_case(name) || d.id.eq_ignore_ascii_case(name))
}

/// The bundled karate-club graph (34 vertices, 78 edges).
pub fn karate() -> Graph {
    io::parse_pajek(KARATE_NET).expect("bundled karate.net parses")
}

/// The bundled karate-club graph, GML edition.
pub fn karate_gml_text() -> &'static str {
    KARATE_GML
}

pub fn dolphins(data_dir: Option<&Path>) -> Result<Graph, Error> {
    find("dolphins").expect("catalog entry").load(data_dir)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn karate_counts() {
        let g = karate();
        assert_eq!((g.n(), g.m()), (34, 78));
        g.validate().unwrap();
        let g = io::parse_gml(KARATE_GML).unwrap();
        assert_eq!((g.n(), g.m()), (34, 78));
    }

    #[test]
    fn lookup() {
        assert_eq!(find("I").unwrap().key, "karate");
        assert_eq!(find("Dolphins").unwrap().id, "IV");
        assert!(find("IX").is_none());
        assert!(find("karate").unwrap().is_bundled());
    }

    #[test]
    fn missing_download_is_a_named_error() {
        let dir = std::env::temp_dir().join("clique-swarm-no-such-dir");
        let err = find("adjnoun").unwrap().load(Some(&dir)).unwrap_err();
        assert!(err.to_string().contains("adjnoun"));
    }
}

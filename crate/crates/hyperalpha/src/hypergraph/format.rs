//! Text format (.uhg): first significant line `k n m`, then m lines of k
//! space-separated 0-based vertex ids. Lines starting with '#' are comments.
//! `serialize(parse(t))` reproduces the canonical form of `t` byte for byte.

use super::{HypergraphError, UniformHypergraph};

impl UniformHypergraph {
    pub fn parse(text: &str) -> Result<UniformHypergraph, HypergraphError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse::<usize>).collect();
            let fields = fields.map_err(|e| HypergraphError::Syntax {
                line: lineno + 1,
                msg: format!("expected integers: {e}"),
            })?;
            match header {
                None => {
                    if fields.len() != 3 {
                        return Err(HypergraphError::Syntax {
                            line: lineno + 1,
                            msg: format!("header must be 'k n m', got {} fields", fields.len()),
                        });
                    }
                    header = Some((fields[0], fields[1], fields[2]));
                }
                Some((k, _, m)) => {
                    if edges.len() == m {
                        return Err(HypergraphError::Syntax {
                            line: lineno + 1,
                            msg: format!("more than the declared {m} edges"),
                        });
                    }
                    if fields.len() != k {
                        return Err(HypergraphError::Syntax {
                            line: lineno + 1,
                            msg: format!("edge line must list {k} vertices"),
                        });
                    }
                    edges.push(fields);
                }
            }
        }
        let (k, n, m) = header.ok_or(HypergraphError::Syntax {
            line: 0,
            msg: "empty input".into(),
        })?;
        if edges.len() != m {
            return Err(HypergraphError::Syntax {
                line: 0,
                msg: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        UniformHypergraph::build(k, n, edges)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {} {}\n", self.k, self.n, self.m());
        for e in &self.edges {
            let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_edge_star() {
        let g = UniformHypergraph::parse("3 5 2\n0 1 2\n2 3 4\n").unwrap();
        assert_eq!(g.k(), 3);
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn round_trip_canonicalizes() {
        let text = "# a comment\n3 5 2\n2 4 3\n2 1 0\n";
        let g = UniformHypergraph::parse(text).unwrap();
        assert_eq!(g.serialize(), "3 5 2\n0 1 2\n2 3 4\n");
        let h = UniformHypergraph::parse(&g.serialize()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn parse_duplicate_edge() {
        let err = UniformHypergraph::parse("3 5 2\n0 1 2\n0 1 2\n").unwrap_err();
        assert!(matches!(err, HypergraphError::DuplicateEdge { .. }));
    }

    #[test]
    fn parse_syntax_errors() {
        assert!(matches!(
            UniformHypergraph::parse("").unwrap_err(),
            HypergraphError::Syntax { .. }
        ));
        assert!(matches!(
            UniformHypergraph::parse("3 5\n").unwrap_err(),
            HypergraphError::Syntax { .. }
        ));
        assert!(matches!(
            UniformHypergraph::parse("3 5 1\n0 1\n").unwrap_err(),
            HypergraphError::Syntax { .. }
        ));
        assert!(matches!(
            UniformHypergraph::parse("3 5 1\n0 1 x\n").unwrap_err(),
            HypergraphError::Syntax { .. }
        ));
    }
}

//! Plain edge-list text: a `n <count>` line, then one `u v` pair per line.
//! Blank lines and `#` comments are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected `n <count>` header")]
    MissingHeader { line: usize },
    #[error("line {line}: expected two vertex indices, found `{text}`")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or(EdgeListError::MissingHeader { line: 1 })?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| EdgeListError::MissingHeader { line: header_line })?,
        _ => return Err(EdgeListError::MissingHeader { line: header_line }),
    };

    let mut g = Graph::edgeless(n);
    for (line, text) in lines {
        let pair: Vec<_> = text.split_whitespace().map(str::parse::<usize>).collect();
        let (u, v) = match pair[..] {
            [Ok(u), Ok(v)] => (u, v),
            _ => {
                return Err(EdgeListError::BadEdge {
                    line,
                    text: text.to_string(),
                })
            }
        };
        let single = Graph::from_edge_list(n, &[(u, v)])
            .map_err(|source| EdgeListError::Graph { line, source });
        single?;
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

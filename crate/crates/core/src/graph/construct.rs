//! Named graph families and the construction-expression parser.
//!
//! ```text
//! expr := cycle(n) | complete(n) | complete_multipartite(n1,...,nk) | hamming(d,q)
//!       | cay(n; s1,...,sm) | line(expr) | complement(expr) | coclique(expr, m)
//!       | cartesian(expr, expr) | graph6:"<string>" | petersen
//! ```
//!
//! Keywords are case-insensitive; the graph6 payload is not. Every
//! constructor documents its vertex order so that downstream arc orders and
//! golden outputs are stable.

use super::{parse_graph6, Graph, GraphError};

/// Largest vertex count any constructor will produce.
pub const MAX_VERTICES: usize = 4096;

fn check_order(family: &'static str, n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        return Err(GraphError::domain(
            family,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    Ok(())
}

/// The cycle `C_n`; vertex `i` is adjacent to `i ± 1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::domain("cycle", format!("need n >= 3, got {n}")));
    }
    check_order("cycle", n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), format!("cycle({n})"))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::domain("complete", "need n >= 1"));
    }
    check_order("complete", n)?;
    let edges = (0..n).flat_map(|x| ((x + 1)..n).map(move |y| (x, y)));
    Graph::from_edges(n, edges, format!("complete({n})"))
}

/// `K_{n1,...,nk}`; parts occupy consecutive vertex blocks in argument order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(GraphError::domain(
            "complete_multipartite",
            "need at least one part and every part non-empty",
        ));
    }
    let n: usize = parts.iter().sum();
    check_order("complete_multipartite", n)?;
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let edges = (0..n).flat_map(|x| {
        let part_of = &part_of;
        ((x + 1)..n)
            .filter(move |&y| part_of[x] != part_of[y])
            .map(move |y| (x, y))
    });
    let label = format!(
        "complete_multipartite({})",
        parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    Graph::from_edges(n, edges.collect::<Vec<_>>(), label)
}

/// The Hamming graph `H(d, q)`.
///
/// Vertices are the words of `{0..q-1}^d` in lexicographic order (the first
/// coordinate is most significant); two words are adjacent iff they differ in
/// exactly one coordinate.
pub fn hamming(d: usize, q: usize) -> Result<Graph, GraphError> {
    if d == 0 || q < 2 {
        return Err(GraphError::domain(
            "hamming",
            format!("need d >= 1 and q >= 2, got d={d}, q={q}"),
        ));
    }
    let n = u32::try_from(d)
        .ok()
        .and_then(|d| q.checked_pow(d))
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| GraphError::domain("hamming", "too many vertices"))?;
    let digits = |mut v: usize| {
        let mut word = vec![0; d];
        for slot in word.iter_mut().rev() {
            *slot = v % q;
            v /= q;
        }
        word
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            let dist = words[x].iter().zip(&words[y]).filter(|(a, b)| a != b).count();
            if dist == 1 {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(n, edges, format!("hamming({d},{q})"))
}

/// The circulant `Cay(Z_n, S)`: `i ~ j` iff `j - i mod n` lies in `S`.
///
/// `S` is reduced mod `n` and must be closed under negation and avoid 0.
pub fn circulant(n: usize, connection: &[i64]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::domain("cay", "need n >= 1"));
    }
    check_order("cay", n)?;
    let modulus = n as i64;
    let mut set: Vec<usize> = connection
        .iter()
        .map(|s| s.rem_euclid(modulus) as usize)
        .collect();
    set.sort_unstable();
    set.dedup();
    if set.contains(&0) {
        return Err(GraphError::domain("cay", "connection set contains 0 (mod n)"));
    }
    if let Some(s) = set.iter().find(|&&s| !set.contains(&((n - s) % n))) {
        return Err(GraphError::domain(
            "cay",
            format!("connection set is not symmetric: {s} present but {} missing", n - s),
        ));
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| set.iter().map(move |&s| (i, (i + s) % n)))
        .collect();
    let label = format!(
        "cay({n};{})",
        set.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    );
    Graph::from_edges(n, edges, label)
}

/// The line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(GraphError::domain("line", "the graph has no edges"));
    }
    check_order("line", edges.len())?;
    let m = edges.len();
    let mut out = Vec::new();
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(m, out, format!("line({})", g.label()))
}

/// The complement on the same vertex order.
pub fn complement(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    let adjacent = (0..n * n)
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            x != y && !g.is_adjacent(x, y)
        })
        .collect();
    Graph::from_adjacency(n, adjacent, format!("complement({})", g.label()))
}

/// The `m`-coclique extension with adjacency `A(g) ⊗ J_m`.
///
/// Vertex `(x, i)` of the extension has id `x * m + i` (vertex-major blocks).
pub fn coclique_extension(g: &Graph, m: usize) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(GraphError::domain("coclique", "need m >= 1"));
    }
    let n = g
        .order()
        .checked_mul(m)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| GraphError::domain("coclique", "too many vertices"))?;
    let adjacent = (0..n * n)
        .map(|idx| g.is_adjacent((idx / n) / m, (idx % n) / m))
        .collect();
    Graph::from_adjacency(n, adjacent, format!("coclique({},{m})", g.label()))
}

/// The Cartesian product; vertex `(u, v)` has id `u * |h| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.order(), h.order());
    let n = gn
        .checked_mul(hn)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| GraphError::domain("cartesian", "too many vertices"))?;
    let adjacent = (0..n * n)
        .map(|idx| {
            let (p, q) = (idx / n, idx % n);
            let (u1, v1, u2, v2) = (p / hn, p % hn, q / hn, q % hn);
            (u1 == u2 && h.is_adjacent(v1, v2)) || (v1 == v2 && g.is_adjacent(u1, u2))
        })
        .collect();
    Graph::from_adjacency(
        n,
        adjacent,
        format!("cartesian({},{})", g.label(), h.label()),
    )
}

/// The Petersen graph, built as the complement of `L(K_5)`.
fn petersen() -> Result<Graph, GraphError> {
    Ok(complement(&line_graph(&complete(5)?)?)?.with_label("petersen"))
}

/// Parses and builds a construction expression.
///
/// The returned graph's label is the canonical spelling of the expression:
/// lowercase, no whitespace, circulant connection sets sorted.
pub fn construct(spec: &str) -> Result<Graph, GraphError> {
    let mut parser = Parser { src: spec, pos: 0 };
    let g = parser.expr()?;
    parser.skip_ws();
    if parser.pos != spec.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> GraphError {
        GraphError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<(), GraphError> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{ch}'")))
        }
    }

    fn ident(&mut self) -> Result<String, GraphError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a graph family name"));
        }
        let word = self.rest()[..len].to_ascii_lowercase();
        self.pos += len;
        Ok(word)
    }

    fn integer(&mut self) -> Result<i64, GraphError> {
        self.skip_ws();
        let rest = self.rest();
        let sign_len = usize::from(rest.starts_with(['-', '+']));
        let digits = rest[sign_len..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - sign_len);
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let text = &rest[..sign_len + digits];
        let value = text
            .parse::<i64>()
            .map_err(|_| self.error(format!("integer out of range: {text}")))?;
        self.pos += text.len();
        Ok(value)
    }

    fn count(&mut self) -> Result<usize, GraphError> {
        let start = self.pos;
        let v = self.integer()?;
        usize::try_from(v).map_err(|_| GraphError::Parse {
            offset: start,
            message: format!("expected a non-negative integer, got {v}"),
        })
    }

    fn expr(&mut self) -> Result<Graph, GraphError> {
        let name = self.ident()?;
        match name.as_str() {
            "graph6" => {
                self.expect(':')?;
                self.skip_ws();
                if !self.rest().starts_with('"') {
                    return Err(self.error("expected a quoted graph6 string"));
                }
                let body = &self.rest()[1..];
                let end = body
                    .find('"')
                    .ok_or_else(|| self.error("unterminated graph6 string"))?;
                let payload = body[..end].to_string();
                self.pos += end + 2;
                let g = parse_graph6(&payload)?;
                Ok(g.with_label(format!("graph6:\"{payload}\"")))
            }
            "petersen" => {
                if self.eat('(') {
                    self.expect(')')?;
                }
                petersen()
            }
            family => {
                self.expect('(')?;
                let g = self.family(family)?;
                self.expect(')')?;
                Ok(g)
            }
        }
    }

    fn count_list(&mut self) -> Result<Vec<usize>, GraphError> {
        let mut out = vec![self.count()?];
        while self.eat(',') {
            out.push(self.count()?);
        }
        Ok(out)
    }

    fn family(&mut self, family: &str) -> Result<Graph, GraphError> {
        match family {
            "cycle" => cycle(self.count()?),
            "complete" => complete(self.count()?),
            "complete_multipartite" => complete_multipartite(&self.count_list()?),
            "hamming" => {
                let d = self.count()?;
                self.expect(',')?;
                let q = self.count()?;
                hamming(d, q)
            }
            "cay" => {
                let n = self.count()?;
                self.expect(';')?;
                let mut set = vec![self.integer()?];
                while self.eat(',') {
                    set.push(self.integer()?);
                }
                circulant(n, &set)
            }
            "line" => line_graph(&self.expr()?),
            "complement" => complement(&self.expr()?),
            "coclique" => {
                let g = self.expr()?;
                self.expect(',')?;
                let m = self.count()?;
                coclique_extension(&g, m)
            }
            "cartesian" => {
                let g = self.expr()?;
                self.expect(',')?;
                let h = self.expr()?;
                cartesian_product(&g, &h)
            }
            other => Err(self.error(format!("unknown graph family '{other}'"))),
        }
    }
}

//! graph6 and plain edge-list encodings.
//!
//! graph6 stores `n` in a header (one byte `n + 63` for `n <= 62`, else
//! `126` followed by three 6-bit bytes), then the upper triangle of the
//! adjacency matrix column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`)
//! packed big-endian into 6-bit groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OPTIONAL_HEADER: &str = ">>graph6<<";

/// Parses a single graph6 line. A trailing `\n` or `\r\n` is accepted;
/// anything else after the adjacency bytes is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let skip = if line.starts_with(OPTIONAL_HEADER) {
        OPTIONAL_HEADER.len()
    } else {
        0
    };
    let bytes = &line.as_bytes()[skip..];
    if bytes.is_empty() {
        return Err(Error::parse(skip, "empty graph6 input"));
    }
    let sextet = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
            Some(&b) => Err(Error::parse(skip + i, format!("byte 0x{b:02x} outside graph6 range"))),
            None => Err(Error::parse(skip + i, "unexpected end of input")),
        }
    };

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(Error::parse(skip, "orders beyond 258047 are not supported"));
        }
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        if n < 63 {
            return Err(Error::parse(skip, format!("non-canonical length header for n={n}")));
        }
        (n as usize, 4)
    } else {
        (sextet(0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::parse(
            skip,
            format!("order {n} exceeds supported maximum {MAX_ORDER}"),
        ));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Error::parse(
            skip + bytes.len(),
            format!(
                "expected {nbytes} adjacency bytes for n={n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(Error::parse(skip + pos + nbytes, "trailing bytes after adjacency data"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u32;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                current = sextet(pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if current & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(skip + pos - 1, "non-zero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `n` followed by whitespace-separated endpoint pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let base = offset;
        let mut rest = content;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let at = base + (content.len() - rest.len()) + start;
            tokens.push((at, &tail[..len]));
            rest = &tail[len..];
        }
        offset += line.len();
    }
    let mut nums = Vec::with_capacity(tokens.len());
    for (at, tok) in &tokens {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::parse(*at, format!("`{tok}` is not a non-negative integer")))?;
        nums.push((*at, v));
    }
    let Some(&(_, n)) = nums.first() else {
        return Err(Error::parse(0, "empty edge list (missing vertex count)"));
    };
    if n > MAX_ORDER {
        return Err(Error::parse(
            0,
            format!("order {n} exceeds supported maximum {MAX_ORDER}"),
        ));
    }
    let pairs = &nums[1..];
    if pairs.len() % 2 != 0 {
        let (at, _) = pairs[pairs.len() - 1];
        return Err(Error::parse(at, "odd number of endpoint tokens"));
    }
    let mut seen = vec![0u64; n];
    let mut edges = Vec::with_capacity(pairs.len() / 2);
    for pair in pairs.chunks(2) {
        let ((at, u), (_, v)) = (pair[0], pair[1]);
        if u >= n || v >= n {
            return Err(Error::parse(at, format!("edge {u} {v} has an endpoint >= {n}")));
        }
        if u == v {
            return Err(Error::parse(at, format!("self-loop at vertex {u}")));
        }
        if seen[u] >> v & 1 == 1 {
            return Err(Error::parse(at, format!("duplicate edge {u} {v}")));
        }
        seen[u] |= 1 << v;
        seen[v] |= 1 << u;
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

/// Writes `g` as `n` on the first line and one `u v` pair per line.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

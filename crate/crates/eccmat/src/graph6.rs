//! graph6 encoding: 6-bit packing of the adjacency upper triangle in
//! column-major order, printable ASCII offset 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes {
        [] => Err(Error::Graph6("empty string".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated order field".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | decode_sextet(b)? as usize;
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated order field".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | decode_sextet(b)? as usize;
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((decode_sextet(*b)? as usize, 1)),
    }
}

fn decode_sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b} out of range 63..=126")))
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut accum = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            accum = (accum << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(accum + 63);
                accum = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((accum << (6 - nbits)) + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, offset) = decode_order(bytes)?;
    if n == 0 {
        return Err(Error::Graph6("graph order must be at least 1".into()));
    }
    let body = &bytes[offset..];
    let bits_needed = n * (n - 1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() != bytes_needed {
        return Err(Error::Graph6(format!(
            "expected {bytes_needed} body bytes for order {n}, got {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let sextet = decode_sextet(body[bit_index / 6])?;
            if (sextet >> (5 - bit_index % 6)) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit_index += 1;
        }
    }
    // trailing pad bits must be zero
    for i in bit_index..bytes_needed * 6 {
        let sextet = decode_sextet(body[i / 6])?;
        if (sextet >> (5 - i % 6)) & 1 == 1 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

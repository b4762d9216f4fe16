//! Planar-diagram codes in the conventional `X(a,b,c,d)` list syntax:
//! one 4-tuple per crossing, incoming under-strand first, then the
//! remaining arc labels counterclockwise.  Labels run 1..2c along the knot.

use super::Pi1Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[usize; 4]>,
}

impl PdCode {
    /// Validates label range and double occurrence.
    pub fn new(crossings: Vec<[usize; 4]>) -> Result<Self, Pi1Error> {
        let c = crossings.len();
        let max = 2 * c;
        let mut counts = vec![0usize; max + 1];
        for x in &crossings {
            for &label in x {
                if label < 1 || label > max {
                    return Err(Pi1Error::LabelRange { label: label as i64, max });
                }
                counts[label] += 1;
            }
        }
        for (label, &got) in counts.iter().enumerate().skip(1) {
            if got != 2 {
                return Err(Pi1Error::LabelCount { label, got });
            }
        }
        Ok(PdCode { crossings })
    }

    /// The empty diagram (unknot).
    pub fn empty() -> Self {
        PdCode { crossings: Vec::new() }
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }
}

impl std::fmt::Display for PdCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for x in &self.crossings {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "X({},{},{},{})", x[0], x[1], x[2], x[3])?;
            first = false;
        }
        if first {
            write!(f, "")?;
        }
        Ok(())
    }
}

/// Parse `X(a,b,c,d) X(e,f,g,h) ...`; whitespace and commas between tuples
/// are optional, and the empty string is the unknot.
pub fn parse_pd(text: &str) -> Result<PdCode, Pi1Error> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut crossings: Vec<[usize; 4]> = Vec::new();
    let err = |pos: usize, msg: &str| Pi1Error::Parse { pos, msg: msg.to_string() };

    loop {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
            pos += 1;
        }
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'X' && bytes[pos] != b'x' {
            return Err(err(pos, "expected `X(`"));
        }
        pos += 1;
        if pos >= bytes.len() || bytes[pos] != b'(' {
            return Err(err(pos, "expected `(` after X"));
        }
        pos += 1;
        let mut labels: Vec<usize> = Vec::with_capacity(4);
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected arc label"));
            }
            let label: usize = std::str::from_utf8(&bytes[start..pos])
                .unwrap()
                .parse()
                .map_err(|_| err(start, "arc label out of range"))?;
            labels.push(label);
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b',' {
                pos += 1;
                continue;
            }
            if pos < bytes.len() && bytes[pos] == b')' {
                pos += 1;
                break;
            }
            return Err(err(pos, "expected `,` or `)`"));
        }
        if labels.len() != 4 {
            return Err(Pi1Error::Arity { index: crossings.len(), got: labels.len() });
        }
        crossings.push([labels[0], labels[1], labels[2], labels[3]]);
    }
    PdCode::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_trefoil() {
        let pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(pd.crossing_count(), 3);
        assert_eq!(pd.edge_count(), 6);
        assert_eq!(pd.crossings()[0], [1, 4, 2, 5]);
    }

    #[test]
    fn round_trips_through_display() {
        let text = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
        let pd = parse_pd(text).unwrap();
        assert_eq!(pd.to_string(), text);
        assert_eq!(parse_pd(&pd.to_string()).unwrap(), pd);
    }

    #[test]
    fn empty_input_is_the_unknot() {
        let pd = parse_pd("").unwrap();
        assert_eq!(pd.crossing_count(), 0);
        assert_eq!(pd, PdCode::empty());
        assert_eq!(parse_pd("   ").unwrap().crossing_count(), 0);
    }

    #[test]
    fn arity_error() {
        assert!(matches!(parse_pd("X(1,2,3)"), Err(Pi1Error::Arity { got: 3, .. })));
    }

    #[test]
    fn label_errors() {
        // labels out of range for one crossing (max 2)
        assert!(matches!(parse_pd("X(1,2,3,4)"), Err(Pi1Error::LabelRange { .. })));
        // label 1 appears four times
        assert!(matches!(
            parse_pd("X(1,1,1,1) X(2,3,2,4) X(3,4,5,6) X(5,6,7,8) hold"),
            Err(Pi1Error::Parse { .. })
        ));
        assert!(matches!(
            parse_pd("X(1,1,2,2) X(3,3,4,4) X(1,2,3,4)"),
            Err(Pi1Error::LabelCount { .. })
        ));
    }
}

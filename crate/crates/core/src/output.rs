//! Text, JSON, CSV and b-file renderings shared by the command line and tests.

use serde::{Deserialize, Serialize};

use crate::basis::{self, BasisPolynomial};
use crate::error::{Error, Result};
use crate::kernel::Integer;
use crate::lab::RootProfile;

/// Structured form of a basis polynomial; coefficients as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub k: u64,
    pub terms: Vec<(u32, String)>,
    #[serde(rename = "const")]
    pub constant: i32,
}

impl From<&BasisPolynomial> for PolyRecord {
    fn from(p: &BasisPolynomial) -> Self {
        Self {
            k: p.k(),
            terms: p.terms().iter().map(|(t, c)| (*t, c.to_string())).collect(),
            constant: p.constant(),
        }
    }
}

impl TryFrom<PolyRecord> for BasisPolynomial {
    type Error = Error;

    fn try_from(r: PolyRecord) -> Result<Self> {
        let terms = r
            .terms
            .into_iter()
            .map(|(t, c)| {
                c.parse::<Integer>()
                    .map(|c| (t, c))
                    .map_err(|_| Error::InvalidArgument(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<_>>()?;
        BasisPolynomial::from_terms(r.k, terms, r.constant)
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::InvalidArgument(format!("json: {e}"))
}

pub fn poly_to_json(p: &BasisPolynomial) -> String {
    serde_json::to_string(&PolyRecord::from(p)).expect("record serializes")
}

pub fn poly_from_json(s: &str) -> Result<BasisPolynomial> {
    serde_json::from_str::<PolyRecord>(s)
        .map_err(json_error)?
        .try_into()
}

/// JSON array of decimal strings.
pub fn integers_to_json(values: &[Integer]) -> String {
    let strings: Vec<String> = values.iter().map(ToString::to_string).collect();
    serde_json::to_string(&strings).expect("strings serialize")
}

pub fn integers_from_json(s: &str) -> Result<Vec<Integer>> {
    let strings: Vec<String> = serde_json::from_str(s).map_err(json_error)?;
    strings
        .iter()
        .map(|v| {
            v.parse()
                .map_err(|_| Error::InvalidArgument(format!("bad integer {v:?}")))
        })
        .collect()
}

/// `index value` lines after a comment giving the first index.
pub fn bfile(offset: u64, values: &[Integer]) -> String {
    let mut out = format!("# offset {offset}\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", offset + i as u64));
    }
    out
}

pub fn profiles_to_csv(profiles: &[RootProfile]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    w.write_record([
        "k",
        "degree",
        "real_count",
        "all_real",
        "zero_bits",
        "rational_roots",
    ])
    .map_err(io)?;
    for p in profiles {
        let roots: Vec<String> = p.rational_roots.iter().map(ToString::to_string).collect();
        w.write_record([
            p.k.to_string(),
            p.degree.to_string(),
            p.real_count.to_string(),
            p.all_real.to_string(),
            p.zero_bits.to_string(),
            roots.join(";"),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One line per index, `{n\k} = ...`.
pub fn table_layout(polys: &[BasisPolynomial]) -> String {
    polys
        .iter()
        .map(|p| format!("{{n\\{}}} = {p}\n", p.k()))
        .collect()
}

/// A table row as read back, not yet checked against its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub k: u64,
    pub terms: Vec<(u32, Integer)>,
    pub constant: i64,
}

/// Reads the layout written by [`table_layout`]; blank lines and `#`
/// comments are skipped.
pub fn parse_table_layout(text: &str) -> Result<Vec<TableRow>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let bad = || Error::InvalidArgument(format!("bad table line {line:?}"));
            let (head, body) = line.split_once('=').ok_or_else(bad)?;
            let k = head
                .trim()
                .strip_prefix("{n\\")
                .and_then(|h| h.strip_suffix('}'))
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            let (terms, constant) = basis::parse_terms(body)?;
            Ok(TableRow { k, terms, constant })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{construct, ConstructMethod};
    use crate::lab::real_root_profile;

    #[test]
    fn poly_json_round_trip() {
        let p = construct(21, ConstructMethod::Recursion);
        let json = poly_to_json(&p);
        assert_eq!(
            json,
            r#"{"k":21,"terms":[[5,"16"],[3,"-2"],[1,"1"]],"const":-1}"#
        );
        let back = poly_from_json(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(poly_to_json(&back), json);
        assert_eq!(
            poly_to_json(&construct(0, ConstructMethod::Step)),
            r#"{"k":0,"terms":[],"const":1}"#
        );
        assert!(poly_from_json(r#"{"k":3,"terms":[[2,"1"]],"const":1}"#).is_err());
    }

    #[test]
    fn integer_lists() {
        let v: Vec<Integer> = vec![
            1.into(),
            (-5).into(),
            "123456789012345678901234567890".parse().unwrap(),
        ];
        let json = integers_to_json(&v);
        assert_eq!(json, r#"["1","-5","123456789012345678901234567890"]"#);
        assert_eq!(integers_from_json(&json).unwrap(), v);
        assert_eq!(bfile(0, &v[..2]), "# offset 0\n0 1\n1 -5\n");
    }

    #[test]
    fn csv_header() {
        let rows = vec![real_root_profile(4).unwrap(), real_root_profile(3).unwrap()];
        let text = profiles_to_csv(&rows).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "k,degree,real_count,all_real,zero_bits,rational_roots"
        );
        assert_eq!(lines.next().unwrap(), "4,3,1,false,2,3");
        assert_eq!(lines.next().unwrap(), "3,2,2,true,0,1;2");
    }

    #[test]
    fn table_round_trip() {
        let polys: Vec<_> = (0..32)
            .map(|k| construct(k, ConstructMethod::System))
            .collect();
        let text = table_layout(&polys);
        assert!(text.starts_with("{n\\0} = 1\n{n\\1} = 1*C(n,1) - 1\n"));
        let rows = parse_table_layout(&text).unwrap();
        for (row, p) in rows.iter().zip(&polys) {
            assert_eq!(row.k, p.k());
            assert_eq!(row.terms, p.terms());
            assert_eq!(row.constant, p.constant() as i64);
        }
        assert!(parse_table_layout("{n\\3} 1").is_err());
    }
}

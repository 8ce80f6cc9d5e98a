//! Benchmark target parsing.
//!
//! A target spec is a sequence of tokens, comma or whitespace separated:
//! plain decimal numbers, inclusive ranges `LO..HI`, and ranges restricted to
//! odd values with a trailing `odd` (e.g. `3..99 odd`).

use std::str::FromStr;

use fermatx::Natural;
use num_integer::Integer;

pub fn parse(args: &[String]) -> Result<Vec<Natural>, String> {
    let joined = args.join(" ");
    let mut out = Vec::new();
    for clause in joined.split(',') {
        let tokens: Vec<&str> = clause.split_whitespace().collect();
        let mut i = 0;
        while i < tokens.len() {
            let token = tokens[i];
            if token.contains("..") {
                let odd = tokens
                    .get(i + 1)
                    .is_some_and(|t| t.eq_ignore_ascii_case("odd"));
                expand_range(token, odd, &mut out)?;
                i += if odd { 2 } else { 1 };
            } else {
                out.push(parse_natural(token)?);
                i += 1;
            }
        }
    }
    Ok(out)
}

fn parse_natural(token: &str) -> Result<Natural, String> {
    Natural::from_str(token).map_err(|_| format!("'{token}' is not a decimal natural number"))
}

fn expand_range(spec: &str, odd_only: bool, out: &mut Vec<Natural>) -> Result<(), String> {
    let (lo_s, hi_s) = spec
        .split_once("..")
        .ok_or_else(|| format!("'{spec}' is not a range"))?;
    let lo = parse_natural(lo_s)?;
    let hi = parse_natural(hi_s)?;
    if lo > hi {
        return Err(format!("range '{spec}' is empty"));
    }
    let mut current = if odd_only && lo.is_even() { lo + 1u32 } else { lo };
    let step = if odd_only { 2u32 } else { 1u32 };
    while current <= hi {
        out.push(current.clone());
        current += step;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(tokens: &[&str]) -> Vec<String> {
        tokens.iter().map(|s| s.to_string()).collect()
    }

    fn values(tokens: &[&str]) -> Vec<u64> {
        parse(&strings(tokens))
            .unwrap()
            .iter()
            .map(|n| n.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn single_number() {
        assert_eq!(values(&["176400"]), vec![176400]);
    }

    #[test]
    fn odd_range_as_separate_tokens() {
        let v = values(&["3..99", "odd"]);
        assert_eq!(v.len(), 49);
        assert_eq!(v[0], 3);
        assert_eq!(*v.last().unwrap(), 99);
        assert!(v.iter().all(|n| n % 2 == 1));
    }

    #[test]
    fn odd_range_as_one_token_with_space() {
        assert_eq!(values(&["4..10 odd"]), vec![5, 7, 9]);
    }

    #[test]
    fn plain_range() {
        assert_eq!(values(&["5..8"]), vec![5, 6, 7, 8]);
    }

    #[test]
    fn mixed_list_with_commas() {
        assert_eq!(values(&["3..7 odd, 100", "9991"]), vec![3, 5, 7, 100, 9991]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse(&strings(&["abc"])).is_err());
        assert!(parse(&strings(&["odd"])).is_err());
        assert!(parse(&strings(&["9..3"])).is_err());
        assert!(parse(&strings(&["1..x"])).is_err());
    }
}

//! The config document format: `key = value` lines grouped under `[section]`
//! headers, `#` comments, insertion order preserved. Keys before the first
//! header belong to the top-level section `""`.

use hopfcheck_core::{Error, Result};

#[derive(Debug, Default)]
pub struct Config {
    sections: Vec<(String, Vec<(String, String)>)>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut sections: Vec<(String, Vec<(String, String)>)> = vec![(String::new(), Vec::new())];
        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| {
                        Error::Parse(format!("line {}: unterminated section header", lineno + 1))
                    })?
                    .trim()
                    .to_string();
                sections.push((name, Vec::new()));
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            sections
                .last_mut()
                .unwrap()
                .1
                .push((key.trim().to_string(), value.trim().to_string()));
        }
        Ok(Config { sections })
    }

    pub fn section(&self, name: &str) -> Option<&[(String, String)]> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, kv)| kv.as_slice())
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.section(section)?
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn require(&self, section: &str, key: &str) -> Result<&str> {
        self.get(section, key).ok_or_else(|| {
            if section.is_empty() {
                Error::Parse(format!("missing key `{key}`"))
            } else {
                Error::Parse(format!("missing key `{key}` in section [{section}]"))
            }
        })
    }

    pub fn require_usize(&self, section: &str, key: &str) -> Result<usize> {
        self.require(section, key)?
            .parse()
            .map_err(|_| Error::Parse(format!("`{key}` must be a nonnegative integer")))
    }

    pub fn get_u64(&self, section: &str, key: &str) -> Result<Option<u64>> {
        match self.get(section, key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Parse(format!("`{key}` must be a nonnegative integer"))),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_and_keys() {
        let c = Config::parse(
            "theorem = thm-4.1\nd = 2\n[algebra]\nkind = qpoly # quantum plane\nn=2\nq_1_2 = -1\n",
        )
        .unwrap();
        assert_eq!(c.get("", "theorem"), Some("thm-4.1"));
        assert_eq!(c.get("algebra", "kind"), Some("qpoly"));
        assert_eq!(c.get("algebra", "q_1_2"), Some("-1"));
        assert_eq!(c.require_usize("algebra", "n").unwrap(), 2);
        assert!(c.require("algebra", "missing").is_err());
        assert!(Config::parse("[open\n").is_err());
        assert!(Config::parse("novalue\n").is_err());
    }
}

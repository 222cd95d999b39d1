use std::collections::BTreeMap;

/// `key=value` integer parameters. Every key must be consumed.
#[derive(Debug)]
pub struct Params {
    values: BTreeMap<String, i64>,
}

impl Params {
    pub fn parse(args: &[String]) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for arg in args {
            let (k, v) = arg
                .split_once('=')
                .ok_or_else(|| format!("parameter {arg:?} is not key=value"))?;
            let v: i64 = v
                .trim()
                .parse()
                .map_err(|_| format!("parameter {k:?} needs an integer, got {v:?}"))?;
            if values.insert(k.trim().to_string(), v).is_some() {
                return Err(format!("parameter {k:?} given twice"));
            }
        }
        Ok(Params { values })
    }

    pub fn opt_i64(&mut self, key: &str) -> Option<i64> {
        self.values.remove(key)
    }

    pub fn i64(&mut self, key: &str) -> Result<i64, String> {
        self.opt_i64(key)
            .ok_or_else(|| format!("missing parameter {key}"))
    }

    pub fn u64(&mut self, key: &str) -> Result<u64, String> {
        let v = self.i64(key)?;
        u64::try_from(v).map_err(|_| format!("parameter {key} must be >= 0, got {v}"))
    }

    pub fn u32(&mut self, key: &str) -> Result<u32, String> {
        let v = self.i64(key)?;
        u32::try_from(v).map_err(|_| format!("parameter {key} out of range: {v}"))
    }

    pub fn opt_u32(&mut self, key: &str) -> Result<Option<u32>, String> {
        match self.opt_i64(key) {
            None => Ok(None),
            Some(v) => u32::try_from(v)
                .map(Some)
                .map_err(|_| format!("parameter {key} out of range: {v}")),
        }
    }

    pub fn finish(self) -> Result<(), String> {
        match self.values.keys().next() {
            None => Ok(()),
            Some(k) => Err(format!("unknown parameter {k}")),
        }
    }
}

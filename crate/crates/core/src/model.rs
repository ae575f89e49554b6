//! The interval representation of a time and the algebra over it:
//! field-union merging, specificity-bounded merging, start-to-end date
//! copying, obvious inference, and the flattening into the ten-field
//! vector used for scoring.

use crate::calendar::{CivilDate, Weekday};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmPm {
    Am,
    Pm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimeOfDay {
    Morning,
    MidMorning,
    Noon,
    Afternoon,
    MidAfternoon,
    Evening,
    Night,
    Midnight,
}

impl TimeOfDay {
    /// The half of the day a descriptor implies, where it does.
    pub fn implied_am_pm(self) -> Option<AmPm> {
        match self {
            TimeOfDay::Morning | TimeOfDay::MidMorning => Some(AmPm::Am),
            TimeOfDay::Noon
            | TimeOfDay::Afternoon
            | TimeOfDay::MidAfternoon
            | TimeOfDay::Evening
            | TimeOfDay::Night => Some(AmPm::Pm),
            TimeOfDay::Midnight => None,
        }
    }
}

/// What kind of thing a unit-named reference names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitName {
    Minute,
    Hour,
    Day,
    Week,
    Weekend,
    Month,
    Year,
    Indexical,
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeicticTerm {
    Today,
    Tomorrow,
    Yesterday,
    Now,
}

/// Specifier atoms attached to a temporal expression ("next week",
/// "the rest of the month", "those days").
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Specifier {
    Next,
    Following,
    Coming,
    This,
    That,
    Last,
    TheRestOf,
    TheEndOf,
    Other,
    Plural,
    BothOf,
    Same,
    AllRange,
    Indefinite,
    First,
    Second,
    Third,
    Fourth,
}

impl Specifier {
    pub fn ordinal(self) -> Option<u8> {
        match self {
            Specifier::First => Some(1),
            Specifier::Second => Some(2),
            Specifier::Third => Some(3),
            Specifier::Fourth => Some(4),
            _ => None,
        }
    }

    /// Adjectives that force a strictly-forward reading.
    pub fn is_forward_looking(self) -> bool {
        matches!(self, Specifier::Next | Specifier::Following | Specifier::Coming)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connective {
    And,
    Or,
    But,
    Then,
    If,
    Because,
    So,
    Unless,
}

/// Adverbs that attach a time to its clause ("at", "until", ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TimeAdv {
    At,
    Around,
    After,
    Before,
    On,
    In,
    From,
    Until,
    To,
}

/// One endpoint of an interval. All fields optional; `minute` non-null
/// implies `hour` non-null. `year` is internal bookkeeping and never
/// scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TimePoint {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub year: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub month: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub date: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub day_of_week: Option<Weekday>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hour: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub minute: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub am_pm: Option<AmPm>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub time_of_day: Option<TimeOfDay>,
}

impl TimePoint {
    pub fn is_empty(&self) -> bool {
        self.month.is_none()
            && self.date.is_none()
            && self.day_of_week.is_none()
            && self.hour.is_none()
            && self.minute.is_none()
            && self.am_pm.is_none()
            && self.time_of_day.is_none()
    }

    pub fn has_date_level_field(&self) -> bool {
        self.month.is_some() || self.date.is_some() || self.day_of_week.is_some()
    }

    pub fn has_clock_field(&self) -> bool {
        self.hour.is_some() || self.minute.is_some() || self.time_of_day.is_some()
    }

    /// The civil date for this endpoint when month, date, and a year are
    /// all known.
    pub fn civil_date(&self) -> Option<CivilDate> {
        CivilDate::new(self.year?, self.month?, self.date?)
    }

    pub fn set_civil_date(&mut self, d: CivilDate) {
        self.year = Some(d.year);
        self.month = Some(d.month);
        self.date = Some(d.day);
        self.day_of_week = Some(d.weekday());
    }

    /// Minutes since midnight when the 12-hour clock can be resolved.
    pub fn minutes_since_midnight(&self) -> Option<u16> {
        let hour = self.hour?;
        let ampm = self.am_pm?;
        let h24 = match (ampm, hour) {
            (AmPm::Am, 12) => 0,
            (AmPm::Am, h) => h as u16,
            (AmPm::Pm, 12) => 12,
            (AmPm::Pm, h) => h as u16 + 12,
        };
        Some(h24 * 60 + self.minute.unwrap_or(0) as u16)
    }
}

/// Field specificity levels. Month is least specific; the date and the
/// day of the week share a level; hour-and-minute is most specific.
/// The am/pm marker sits at the time-of-day level: it carries the same
/// half-of-day information as "morning" or "afternoon".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Specificity(pub u8);

impl Specificity {
    pub const MONTH: Specificity = Specificity(1);
    pub const DATE: Specificity = Specificity(2);
    pub const TIME_OF_DAY: Specificity = Specificity(3);
    pub const HOUR_MIN: Specificity = Specificity(4);
}

/// Which endpoint(s) of a unit an operation looks at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Start,
    End,
    Both,
}

/// The basic representational unit: an interval with a start and an end
/// point plus name/specifier/duration/connective metadata. A point time
/// has identical endpoints; an utterance with no temporal information
/// has all fields null.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TemporalUnit {
    #[serde(default)]
    pub start: TimePoint,
    #[serde(default)]
    pub end: TimePoint,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<UnitName>,
    #[serde(skip_serializing_if = "BTreeSet::is_empty", default)]
    pub specifiers: BTreeSet<Specifier>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub duration_hours: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub connective: Option<Connective>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub deictic: Option<DeicticTerm>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub start_adv: Option<TimeAdv>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub end_adv: Option<TimeAdv>,
}

impl TemporalUnit {
    pub fn is_empty(&self) -> bool {
        self.start.is_empty() && self.end.is_empty() && self.name.is_none() && self.deictic.is_none()
    }

    pub fn is_deictic(&self) -> bool {
        self.deictic.is_some()
    }

    pub fn point(&self, side: Side) -> &TimePoint {
        match side {
            Side::Start | Side::Both => &self.start,
            Side::End => &self.end,
        }
    }

    /// True when the unit's endpoints resolve to more than one day.
    pub fn is_multi_day(&self) -> bool {
        match (self.start.civil_date(), self.end.civil_date()) {
            (Some(a), Some(b)) => a != b,
            _ => {
                self.start.has_date_level_field()
                    && self.end.has_date_level_field()
                    && (self.start.month, self.start.date, self.start.day_of_week)
                        != (self.end.month, self.end.date, self.end.day_of_week)
            }
        }
    }
}

fn point_levels(p: &TimePoint) -> impl Iterator<Item = Specificity> + '_ {
    [
        p.month.map(|_| Specificity::MONTH),
        p.date.map(|_| Specificity::DATE),
        p.day_of_week.map(|_| Specificity::DATE),
        p.time_of_day.map(|_| Specificity::TIME_OF_DAY),
        p.am_pm.map(|_| Specificity::TIME_OF_DAY),
        p.hour.map(|_| Specificity::HOUR_MIN),
        p.minute.map(|_| Specificity::HOUR_MIN),
    ]
    .into_iter()
    .flatten()
}

/// A unit name contributes the specificity of the fields that resolving
/// it would fill: a week or day resolves to date-level information, a
/// month to month-level.
fn name_level(name: UnitName) -> Option<Specificity> {
    match name {
        UnitName::Day | UnitName::Week | UnitName::Weekend => Some(Specificity::DATE),
        UnitName::Month | UnitName::Year => Some(Specificity::MONTH),
        UnitName::Hour | UnitName::Minute => Some(Specificity::HOUR_MIN),
        UnitName::Indexical | UnitName::Special => None,
    }
}

/// The specificity level of the most specific non-null field on the
/// requested side, or None if every relevant field is null.
pub fn specificity(side: Side, tu: &TemporalUnit) -> Option<Specificity> {
    let field_max = match side {
        Side::Start => point_levels(&tu.start).max(),
        Side::End => point_levels(&tu.end).max(),
        Side::Both => point_levels(&tu.start).chain(point_levels(&tu.end)).max(),
    };
    let name_max = tu.name.and_then(name_level);
    field_max.max(name_max)
}

/// The specificity of the least specific non-null field on a side.
pub fn least_specificity(side: Side, tu: &TemporalUnit) -> Option<Specificity> {
    let field_min = match side {
        Side::Start => point_levels(&tu.start).min(),
        Side::End => point_levels(&tu.end).min(),
        Side::Both => point_levels(&tu.start).chain(point_levels(&tu.end)).min(),
    };
    let name_min = tu.name.and_then(name_level);
    match (field_min, name_min) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

fn union<T: Copy + PartialEq>(a: Option<T>, b: Option<T>) -> Result<Option<T>, ()> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(()),
        (Some(x), _) => Ok(Some(x)),
        (None, y) => Ok(y),
    }
}

fn merge_points(a: &TimePoint, b: &TimePoint) -> Option<TimePoint> {
    Some(TimePoint {
        year: union(a.year, b.year).ok()?,
        month: union(a.month, b.month).ok()?,
        date: union(a.date, b.date).ok()?,
        day_of_week: union(a.day_of_week, b.day_of_week).ok()?,
        hour: union(a.hour, b.hour).ok()?,
        minute: union(a.minute, b.minute).ok()?,
        am_pm: union(a.am_pm, b.am_pm).ok()?,
        time_of_day: union(a.time_of_day, b.time_of_day).ok()?,
    })
}

/// Field union of two units. Fails (None) if any field carries two
/// differing non-null values.
pub fn merge(a: &TemporalUnit, b: &TemporalUnit) -> Option<TemporalUnit> {
    let mut specifiers = a.specifiers.clone();
    specifiers.extend(b.specifiers.iter().copied());
    Some(TemporalUnit {
        start: merge_points(&a.start, &b.start)?,
        end: merge_points(&a.end, &b.end)?,
        name: union(a.name, b.name).ok()?,
        specifiers,
        duration_hours: match (a.duration_hours, b.duration_hours) {
            (Some(x), Some(y)) if (x - y).abs() > 1e-9 => return None,
            (Some(x), _) => Some(x),
            (None, y) => y,
        },
        connective: union(a.connective, b.connective).ok()?,
        deictic: union(a.deictic, b.deictic).ok()?,
        start_adv: a.start_adv.or(b.start_adv),
        end_adv: a.end_adv.or(b.end_adv),
    })
}

/// Merge bounded by the current unit's specificity. `b` is the current
/// (modifying) unit and `f` its most specific level:
///
/// * fields of `a` above `f` are dropped;
/// * at level `f`, `b` wins where it has a value (that is the
///   modification) and `a` fills the gaps;
/// * strictly below `f` the two must agree, or the merge fails.
///
/// Hour and minute move as one composite value: when `b` supplies an
/// hour, `a`'s minute does not leak into it.
pub fn merge_upper(a: &TemporalUnit, b: &TemporalUnit) -> Option<TemporalUnit> {
    let f = match specificity(Side::Both, b) {
        Some(f) => f,
        None => return Some(b.clone()),
    };
    let mut out = b.clone();
    for (ap, op) in [(&a.start, &mut out.start), (&a.end, &mut out.end)] {
        take_group(Specificity::MONTH, f, &mut op.month, ap.month)?;
        take_group(Specificity::DATE, f, &mut op.date, ap.date)?;
        take_group(Specificity::DATE, f, &mut op.day_of_week, ap.day_of_week)?;
        take_group(Specificity::TIME_OF_DAY, f, &mut op.time_of_day, ap.time_of_day)?;
        take_group(Specificity::TIME_OF_DAY, f, &mut op.am_pm, ap.am_pm)?;
        // Hour & minute as a composite: only taken together.
        if Specificity::HOUR_MIN <= f && op.hour.is_none() {
            op.hour = ap.hour;
            op.minute = ap.minute;
        } else if Specificity::HOUR_MIN < f {
            // Unreachable (HOUR_MIN is maximal) but keeps the intent clear.
            if op.hour.is_some() && ap.hour.is_some() && op.hour != ap.hour {
                return None;
            }
        }
        if op.year.is_none() {
            op.year = ap.year;
        }
    }
    Some(out)
}

fn take_group<T: Copy + PartialEq>(
    level: Specificity,
    f: Specificity,
    out: &mut Option<T>,
    from_a: Option<T>,
) -> Option<()> {
    if level > f {
        return Some(()); // fields of `a` above b's level are dropped
    }
    if level == f {
        if out.is_none() {
            *out = from_a;
        }
        return Some(());
    }
    // Strictly below f: must be consistent.
    match (*out, from_a) {
        (Some(x), Some(y)) if x != y => None,
        (None, y) => {
            *out = y;
            Some(())
        }
        _ => Some(()),
    }
}

/// Copy the start date fields of a simple (non-interval) time to its end
/// point. The certainty factor is supplied by configuration.
pub fn date_copy(tu: &TemporalUnit, cf: f64) -> Option<(TemporalUnit, f64)> {
    if !tu.end.is_empty() {
        return None;
    }
    if !tu.start.has_date_level_field() {
        return None;
    }
    let mut out = tu.clone();
    copy_start_date_to_end(&mut out);
    Some((out, cf))
}

/// End-point completion used by the date-copy rule: start month, date,
/// day of week (and year) flow into null end fields.
pub fn copy_start_date_to_end(tu: &mut TemporalUnit) {
    if tu.end.month.is_none() {
        tu.end.month = tu.start.month;
    }
    if tu.end.date.is_none() {
        tu.end.date = tu.start.date;
    }
    if tu.end.day_of_week.is_none() {
        tu.end.day_of_week = tu.start.day_of_week;
    }
    if tu.end.year.is_none() {
        tu.end.year = tu.start.year;
    }
}

/// Safe completions: day of week from month + date (year from the unit
/// or the dialog context), am/pm implied by a time-of-day descriptor,
/// the end half-of-day from the start clock, and the duration from two
/// resolvable clock times. Never overwrites a non-null field; idempotent.
pub fn obvious_inference(tu: &TemporalUnit, year_context: CivilDate) -> TemporalUnit {
    let mut out = tu.clone();
    for p in [&mut out.start, &mut out.end] {
        if p.day_of_week.is_none() {
            if let (Some(m), Some(d)) = (p.month, p.date) {
                if let Some(cd) = CivilDate::new(p.year.unwrap_or(year_context.year), m, d) {
                    p.day_of_week = Some(cd.weekday());
                }
            }
        }
        if p.am_pm.is_none() {
            if let Some(tod) = p.time_of_day {
                p.am_pm = tod.implied_am_pm();
            }
        }
    }
    // A bare end hour in an interval whose start clock is resolved takes
    // the half of day that puts it at or after the start.
    if out.end.hour.is_some() && out.end.am_pm.is_none() {
        if let Some(start_min) = out.start.minutes_since_midnight() {
            let choice = [AmPm::Am, AmPm::Pm]
                .into_iter()
                .filter_map(|c| {
                    let mut probe = out.end;
                    probe.am_pm = Some(c);
                    probe.minutes_since_midnight().filter(|m| *m >= start_min).map(|m| (m, c))
                })
                .min_by_key(|(m, _)| *m);
            if let Some((_, c)) = choice {
                out.end.am_pm = Some(c);
            }
        }
    }
    if out.duration_hours.is_none() {
        if let (Some(s), Some(e)) = (
            out.start.minutes_since_midnight(),
            out.end.minutes_since_midnight(),
        ) {
            if e >= s {
                out.duration_hours = Some((e - s) as f64 / 60.0);
            }
        }
    }
    out
}

/// How an hour-and-minute field scores: resolved to minutes since
/// midnight when the half of day is known, kept as a flagged ambiguous
/// 12-hour value otherwise (a null minute reads as :00).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HourMin {
    Resolved(u16),
    Ambiguous(u8, u8),
}

/// One endpoint of the ten-field evaluation vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EndpointVector {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub month: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub date: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub day_of_week: Option<Weekday>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hour_min: Option<HourMin>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub time_day: Option<TimeOfDay>,
}

/// The simple vector representation a unit is mapped onto before
/// evaluation: start and end x month, date, day of week, hour-minute,
/// time of day. Years are dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EvalVector {
    #[serde(default)]
    pub start: EndpointVector,
    #[serde(default)]
    pub end: EndpointVector,
}

impl EvalVector {
    pub fn is_all_null(&self) -> bool {
        *self == EvalVector::default()
    }
}

fn endpoint_vector(p: &TimePoint) -> EndpointVector {
    let hour_min = match (p.hour, p.minutes_since_midnight()) {
        (_, Some(m)) => Some(HourMin::Resolved(m)),
        (Some(h), None) => Some(HourMin::Ambiguous(h, p.minute.unwrap_or(0))),
        (None, None) => None,
    };
    EndpointVector {
        month: p.month,
        date: p.date,
        day_of_week: p.day_of_week,
        hour_min,
        time_day: p.time_of_day,
    }
}

pub fn to_eval_vector(tu: &TemporalUnit) -> EvalVector {
    EvalVector {
        start: endpoint_vector(&tu.start),
        end: endpoint_vector(&tu.end),
    }
}

impl fmt::Display for HourMin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HourMin::Resolved(m) => write!(f, "{:02}:{:02}", m / 60, m % 60),
            HourMin::Ambiguous(h, m) => write!(f, "{h}:{m:02}?"),
        }
    }
}

/// Convenience constructors used across the crate and in tests.
pub mod build {
    use super::*;

    #[derive(Default)]
    pub struct Tu(TemporalUnit);

    impl Tu {
        pub fn new() -> Tu {
            Tu::default()
        }

        pub fn start_date(mut self, month: u8, date: u8) -> Tu {
            self.0.start.month = Some(month);
            self.0.start.date = Some(date);
            self
        }

        pub fn start_dow(mut self, wd: Weekday) -> Tu {
            self.0.start.day_of_week = Some(wd);
            self
        }

        pub fn start_civil(mut self, d: CivilDate) -> Tu {
            self.0.start.set_civil_date(d);
            self
        }

        pub fn end_civil(mut self, d: CivilDate) -> Tu {
            self.0.end.set_civil_date(d);
            self
        }

        pub fn start_clock(mut self, hour: u8, minute: Option<u8>, am_pm: Option<AmPm>) -> Tu {
            self.0.start.hour = Some(hour);
            self.0.start.minute = minute;
            self.0.start.am_pm = am_pm;
            self
        }

        pub fn end_clock(mut self, hour: u8, minute: Option<u8>, am_pm: Option<AmPm>) -> Tu {
            self.0.end.hour = Some(hour);
            self.0.end.minute = minute;
            self.0.end.am_pm = am_pm;
            self
        }

        pub fn start_tod(mut self, tod: TimeOfDay) -> Tu {
            self.0.start.time_of_day = Some(tod);
            self
        }

        pub fn name(mut self, name: UnitName) -> Tu {
            self.0.name = Some(name);
            self
        }

        pub fn spec(mut self, s: Specifier) -> Tu {
            self.0.specifiers.insert(s);
            self
        }

        pub fn deictic(mut self, d: DeicticTerm) -> Tu {
            self.0.deictic = Some(d);
            self.0.name = Some(UnitName::Indexical);
            self
        }

        pub fn build(self) -> TemporalUnit {
            self.0
        }
    }
}

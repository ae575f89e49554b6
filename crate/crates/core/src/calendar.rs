//! Proleptic-Gregorian date arithmetic: weekday computation, forward and
//! backward searches for weekdays and calendar units, and the named
//! subranges (current week, workweek, weekend, rest-of, end-of) that the
//! resolution rules build on.
//!
//! Everything here is pure and `Copy`; no clocks, no time zones.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Weekday {
    Monday,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
    Sunday,
}

impl Weekday {
    pub const ALL: [Weekday; 7] = [
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
        Weekday::Saturday,
        Weekday::Sunday,
    ];

    /// Days since Monday, 0..=6.
    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Weekday {
        Weekday::ALL[(i % 7) as usize]
    }

    pub fn is_weekend(self) -> bool {
        matches!(self, Weekday::Saturday | Weekday::Sunday)
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
            Weekday::Saturday => "Saturday",
            Weekday::Sunday => "Sunday",
        };
        f.write_str(s)
    }
}

/// A calendar date. Years are carried internally so searches can cross
/// month and year boundaries; the evaluation vectors drop them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CivilDate {
    pub year: i32,
    pub month: u8,
    pub day: u8,
}

impl CivilDate {
    pub fn new(year: i32, month: u8, day: u8) -> Option<CivilDate> {
        if !(1..=12).contains(&month) || day == 0 || day > days_in_month(year, month) {
            return None;
        }
        Some(CivilDate { year, month, day })
    }

    /// Days since 1970-01-01 (may be negative).
    pub fn to_epoch_days(self) -> i64 {
        rata_die(self.year, self.month, self.day) - RATA_DIE_UNIX_EPOCH
    }

    pub fn from_epoch_days(days: i64) -> CivilDate {
        civil_from_rata_die(days + RATA_DIE_UNIX_EPOCH)
    }

    pub fn weekday(self) -> Weekday {
        // 1970-01-01 was a Thursday (index 3 from Monday).
        Weekday::from_index(((self.to_epoch_days() + 3).rem_euclid(7)) as u8)
    }

    pub fn add_days(self, n: i64) -> CivilDate {
        CivilDate::from_epoch_days(self.to_epoch_days() + n)
    }

    /// Parse "YYYY-MM-DD".
    pub fn parse_iso(s: &str) -> Option<CivilDate> {
        let mut it = s.split('-');
        let y: i32 = it.next()?.parse().ok()?;
        let m: u8 = it.next()?.parse().ok()?;
        let d: u8 = it.next()?.parse().ok()?;
        if it.next().is_some() {
            return None;
        }
        CivilDate::new(y, m, d)
    }
}

impl fmt::Display for CivilDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

pub fn is_leap_year(year: i32) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

pub fn days_in_month(year: i32, month: u8) -> u8 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 => {
            if is_leap_year(year) {
                29
            } else {
                28
            }
        }
        _ => 0,
    }
}

const RATA_DIE_UNIX_EPOCH: i64 = 719_163;

// Day count from 0000-03-01, shifted so that 0001-01-01 is day 367
// (Howard Hinnant's days_from_civil, adapted).
fn rata_die(y: i32, m: u8, d: u8) -> i64 {
    let y = y as i64 - if m <= 2 { 1 } else { 0 };
    let era = if y >= 0 { y } else { y - 399 } / 400;
    let yoe = y - era * 400;
    let mp = ((m as i64) + 9) % 12;
    let doy = (153 * mp + 2) / 5 + d as i64 - 1;
    let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    era * 146_097 + doe + 307
}

fn civil_from_rata_die(z: i64) -> CivilDate {
    let z = z - 307;
    let era = if z >= 0 { z } else { z - 146_096 } / 146_097;
    let doe = z - era * 146_097;
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let y = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u8;
    let m = if mp < 10 { mp + 3 } else { mp - 9 } as u8;
    CivilDate {
        year: (y + if m <= 2 { 1 } else { 0 }) as i32,
        month: m,
        day: d,
    }
}

/// Inclusive run of days; weeks, weekends, and months are ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DateRange {
    pub first: CivilDate,
    pub last: CivilDate,
}

impl DateRange {
    pub fn new(first: CivilDate, last: CivilDate) -> Option<DateRange> {
        (first <= last).then_some(DateRange { first, last })
    }

    pub fn single(day: CivilDate) -> DateRange {
        DateRange { first: day, last: day }
    }

    pub fn contains(&self, d: CivilDate) -> bool {
        self.first <= d && d <= self.last
    }
}

/// Whether a "week" means the Mon-Fri workweek (default) or Mon-Sun.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeekConvention {
    #[default]
    MonFri,
    MonSun,
}

impl WeekConvention {
    fn week_len(self) -> i64 {
        match self {
            WeekConvention::MonFri => 5,
            WeekConvention::MonSun => 7,
        }
    }
}

/// Calendar units the search functions understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CalendarUnit {
    Day,
    Week,
    Weekend,
    Month,
    Year,
}

/// A search target: a weekday name, a day of the month, a month of the
/// year, or a whole calendar unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Weekday(Weekday),
    DayOfMonth(u8),
    MonthOfYear(u8),
    Unit(CalendarUnit),
}

/// Result of a calendar search: a single day or a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolved {
    Day(CivilDate),
    Range(DateRange),
}

impl Resolved {
    pub fn start(&self) -> CivilDate {
        match self {
            Resolved::Day(d) => *d,
            Resolved::Range(r) => r.first,
        }
    }

    pub fn range(&self) -> DateRange {
        match self {
            Resolved::Day(d) => DateRange::single(*d),
            Resolved::Range(r) => *r,
        }
    }
}

fn monday_of(d: CivilDate) -> CivilDate {
    d.add_days(-(d.weekday().index() as i64))
}

/// The week containing `d` under the given convention.
pub fn week_of(d: CivilDate, conv: WeekConvention) -> DateRange {
    let mon = monday_of(d);
    DateRange {
        first: mon,
        last: mon.add_days(conv.week_len() - 1),
    }
}

/// The Sat-Sun pair belonging to the week containing `d`.
pub fn weekend_of(d: CivilDate) -> DateRange {
    let mon = monday_of(d);
    DateRange {
        first: mon.add_days(5),
        last: mon.add_days(6),
    }
}

pub fn month_of(year: i32, month: u8) -> DateRange {
    DateRange {
        first: CivilDate { year, month, day: 1 },
        last: CivilDate {
            year,
            month,
            day: days_in_month(year, month),
        },
    }
}

fn year_of(year: i32) -> DateRange {
    DateRange {
        first: CivilDate { year, month: 1, day: 1 },
        last: CivilDate { year, month: 12, day: 31 },
    }
}

/// The next occurrence of `target` strictly after `ref_date`.
pub fn next(target: Target, ref_date: CivilDate, conv: WeekConvention) -> Resolved {
    match target {
        Target::Weekday(wd) => {
            let delta = (wd.index() as i64 - ref_date.weekday().index() as i64).rem_euclid(7);
            let delta = if delta == 0 { 7 } else { delta };
            Resolved::Day(ref_date.add_days(delta))
        }
        Target::DayOfMonth(n) => {
            let mut y = ref_date.year;
            let mut m = ref_date.month;
            if ref_date.day >= n || n > days_in_month(y, m) {
                loop {
                    m += 1;
                    if m > 12 {
                        m = 1;
                        y += 1;
                    }
                    if n <= days_in_month(y, m) {
                        break;
                    }
                }
            }
            Resolved::Day(CivilDate { year: y, month: m, day: n })
        }
        Target::MonthOfYear(m) => {
            let y = if ref_date.month >= m { ref_date.year + 1 } else { ref_date.year };
            Resolved::Range(month_of(y, m))
        }
        Target::Unit(CalendarUnit::Day) => Resolved::Day(ref_date.add_days(1)),
        Target::Unit(CalendarUnit::Week) => {
            Resolved::Range(week_of(monday_of(ref_date).add_days(7), conv))
        }
        Target::Unit(CalendarUnit::Weekend) => {
            let this = weekend_of(ref_date);
            if this.first > ref_date {
                Resolved::Range(this)
            } else {
                Resolved::Range(weekend_of(ref_date.add_days(7)))
            }
        }
        Target::Unit(CalendarUnit::Month) => {
            let (y, m) = if ref_date.month == 12 {
                (ref_date.year + 1, 1)
            } else {
                (ref_date.year, ref_date.month + 1)
            };
            Resolved::Range(month_of(y, m))
        }
        Target::Unit(CalendarUnit::Year) => Resolved::Range(year_of(ref_date.year + 1)),
    }
}

/// Like [`next`], but `ref_date` itself (or the unit containing it) is an
/// eligible match.
pub fn next_incl_today(target: Target, ref_date: CivilDate, conv: WeekConvention) -> Resolved {
    match target {
        Target::Weekday(wd) => {
            if ref_date.weekday() == wd {
                Resolved::Day(ref_date)
            } else {
                next(target, ref_date, conv)
            }
        }
        Target::DayOfMonth(n) => {
            if ref_date.day == n {
                Resolved::Day(ref_date)
            } else {
                next(target, ref_date, conv)
            }
        }
        Target::MonthOfYear(m) => {
            if ref_date.month == m {
                Resolved::Range(month_of(ref_date.year, m))
            } else {
                next(target, ref_date, conv)
            }
        }
        Target::Unit(CalendarUnit::Day) => Resolved::Day(ref_date),
        Target::Unit(CalendarUnit::Week) => Resolved::Range(week_of(ref_date, conv)),
        Target::Unit(CalendarUnit::Weekend) => {
            let this = weekend_of(ref_date);
            if this.last >= ref_date {
                Resolved::Range(this)
            } else {
                Resolved::Range(weekend_of(ref_date.add_days(7)))
            }
        }
        Target::Unit(CalendarUnit::Month) => Resolved::Range(month_of(ref_date.year, ref_date.month)),
        Target::Unit(CalendarUnit::Year) => Resolved::Range(year_of(ref_date.year)),
    }
}

/// The last occurrence of `target` strictly before `ref_date` (for
/// ranges: the latest range ending before `ref_date`).
pub fn last(target: Target, ref_date: CivilDate, conv: WeekConvention) -> Resolved {
    match target {
        Target::Weekday(wd) => {
            let delta = (ref_date.weekday().index() as i64 - wd.index() as i64).rem_euclid(7);
            let delta = if delta == 0 { 7 } else { delta };
            Resolved::Day(ref_date.add_days(-delta))
        }
        Target::DayOfMonth(n) => {
            let mut y = ref_date.year;
            let mut m = ref_date.month;
            if ref_date.day <= n || n > days_in_month(y, m) {
                loop {
                    m -= 1;
                    if m == 0 {
                        m = 12;
                        y -= 1;
                    }
                    if n <= days_in_month(y, m) {
                        break;
                    }
                }
            }
            Resolved::Day(CivilDate { year: y, month: m, day: n })
        }
        Target::MonthOfYear(m) => {
            let y = if ref_date.month <= m { ref_date.year - 1 } else { ref_date.year };
            Resolved::Range(month_of(y, m))
        }
        Target::Unit(CalendarUnit::Day) => Resolved::Day(ref_date.add_days(-1)),
        Target::Unit(CalendarUnit::Week) => {
            Resolved::Range(week_of(monday_of(ref_date).add_days(-7), conv))
        }
        Target::Unit(CalendarUnit::Weekend) => {
            let mut candidate = weekend_of(ref_date);
            while candidate.last >= ref_date {
                candidate = weekend_of(candidate.first.add_days(-7));
            }
            Resolved::Range(candidate)
        }
        Target::Unit(CalendarUnit::Month) => {
            let (y, m) = if ref_date.month == 1 {
                (ref_date.year - 1, 12)
            } else {
                (ref_date.year, ref_date.month - 1)
            };
            Resolved::Range(month_of(y, m))
        }
        Target::Unit(CalendarUnit::Year) => Resolved::Range(year_of(ref_date.year - 1)),
    }
}

/// The current unit (or weekday within the current week) relative to
/// `ref_date`: `this(week)` is the week containing it, `this(weekend)`
/// the weekend at the end of that week, `this(Thursday)` the Thursday of
/// that week.
pub fn this(target: Target, ref_date: CivilDate, conv: WeekConvention) -> Resolved {
    match target {
        Target::Weekday(wd) => Resolved::Day(monday_of(ref_date).add_days(wd.index() as i64)),
        Target::Unit(CalendarUnit::Week) => Resolved::Range(week_of(ref_date, conv)),
        Target::Unit(CalendarUnit::Weekend) => Resolved::Range(weekend_of(ref_date)),
        Target::Unit(CalendarUnit::Month) => Resolved::Range(month_of(ref_date.year, ref_date.month)),
        Target::Unit(CalendarUnit::Year) => Resolved::Range(year_of(ref_date.year)),
        Target::Unit(CalendarUnit::Day) => Resolved::Day(ref_date),
        // "this the 14th" / "this August" degrade to the inclusive search.
        other => next_incl_today(other, ref_date, conv),
    }
}

/// "The rest of" a range as seen from `ref_date`: the day after
/// `ref_date` through the end, clamped to the range. None when nothing
/// is left.
pub fn rest_of(r: DateRange, ref_date: CivilDate) -> Option<DateRange> {
    let first = if ref_date < r.first {
        r.first
    } else {
        ref_date.add_days(1)
    };
    DateRange::new(first, r.last)
}

/// "The end of" a week-like range: its final two non-weekend days.
pub fn end_of_week(r: DateRange) -> Option<DateRange> {
    let mut days = Vec::new();
    let mut d = r.last;
    while d >= r.first && days.len() < 2 {
        if !d.weekday().is_weekend() {
            days.push(d);
        }
        d = d.add_days(-1);
    }
    match days.len() {
        2 => DateRange::new(days[1], days[0]),
        1 => Some(DateRange::single(days[0])),
        _ => None,
    }
}

/// "The end of" a month: its last ten days (day `len - 10` onward, e.g.
/// the 21st through the 31st of a 31-day month).
pub fn end_of_month(year: i32, month: u8) -> DateRange {
    let len = days_in_month(year, month);
    DateRange {
        first: CivilDate { year, month, day: len - 10 },
        last: CivilDate { year, month, day: len },
    }
}

/// The `n`-th workweek of a month: the n-th Monday through the
/// week's end under the convention. None if the month has no n-th Monday.
pub fn nth_week_of_month(year: i32, month: u8, n: u8, conv: WeekConvention) -> Option<DateRange> {
    if n == 0 {
        return None;
    }
    let first = CivilDate { year, month, day: 1 };
    let first_monday = match next_incl_today(Target::Weekday(Weekday::Monday), first, conv) {
        Resolved::Day(d) => d,
        Resolved::Range(_) => unreachable!(),
    };
    let mon = first_monday.add_days(7 * (n as i64 - 1));
    if mon.month != month || mon.year != year {
        return None;
    }
    Some(DateRange {
        first: mon,
        last: mon.add_days(conv.week_len() - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn d(y: i32, m: u8, day: u8) -> CivilDate {
        CivilDate::new(y, m, day).unwrap()
    }

    /// Independent weekday oracle: Zeller's congruence.
    fn zeller(date: CivilDate) -> Weekday {
        let (mut y, mut m) = (date.year, date.month as i32);
        if m < 3 {
            m += 12;
            y -= 1;
        }
        let k = y.rem_euclid(100);
        let j = y.div_euclid(100);
        let h = (date.day as i32 + (13 * (m + 1)) / 5 + k + k / 4 + j / 4 + 5 * j).rem_euclid(7);
        // Zeller: 0 = Saturday. Shift to Monday-based index.
        Weekday::from_index(((h + 5) % 7) as u8)
    }

    fn random_date(rng: &mut StdRng) -> CivilDate {
        loop {
            let y = rng.gen_range(1900..=2100);
            let m = rng.gen_range(1..=12u8);
            let day = rng.gen_range(1..=31u8);
            if let Some(date) = CivilDate::new(y, m, day) {
                return date;
            }
        }
    }

    #[test]
    fn weekday_paper_anchors() {
        assert_eq!(d(1996, 8, 19).weekday(), Weekday::Monday);
        assert_eq!(d(1993, 9, 28).weekday(), Weekday::Tuesday);
        assert_eq!(d(2000, 2, 29).weekday(), Weekday::Tuesday);
        assert_eq!(d(1996, 9, 23).weekday(), Weekday::Monday);
        assert_eq!(d(1997, 4, 11).weekday(), Weekday::Friday);
        assert_eq!(d(1993, 5, 10).weekday(), Weekday::Monday);
    }

    #[test]
    fn weekday_matches_zeller_oracle() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        for _ in 0..10_000 {
            let date = random_date(&mut rng);
            assert_eq!(date.weekday(), zeller(date), "mismatch on {date}");
        }
    }

    #[test]
    fn epoch_roundtrip() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0002);
        for _ in 0..10_000 {
            let date = random_date(&mut rng);
            assert_eq!(CivilDate::from_epoch_days(date.to_epoch_days()), date);
        }
        assert_eq!(d(1970, 1, 1).to_epoch_days(), 0);
        assert_eq!(d(1970, 1, 1).weekday(), Weekday::Thursday);
    }

    #[test]
    fn next_weekday_examples() {
        // next(Monday, Friday the 19th) = Monday the 22nd
        assert_eq!(
            next(Target::Weekday(Weekday::Monday), d(1994, 8, 19), WeekConvention::MonFri),
            Resolved::Day(d(1994, 8, 22))
        );
        assert_eq!(
            next(Target::Weekday(Weekday::Wednesday), d(1996, 8, 19), WeekConvention::MonFri),
            Resolved::Day(d(1996, 8, 21))
        );
        assert_eq!(
            next(Target::Unit(CalendarUnit::Week), d(1997, 4, 11), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1997, 4, 14), last: d(1997, 4, 18) })
        );
    }

    #[test]
    fn next_incl_today_examples() {
        assert_eq!(
            next_incl_today(Target::Weekday(Weekday::Monday), d(1996, 9, 23), WeekConvention::MonFri),
            Resolved::Day(d(1996, 9, 23))
        );
        assert_eq!(
            next_incl_today(Target::Weekday(Weekday::Tuesday), d(1996, 9, 23), WeekConvention::MonFri),
            Resolved::Day(d(1996, 9, 24))
        );
        assert_eq!(
            next_incl_today(Target::Unit(CalendarUnit::Week), d(1996, 9, 25), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1996, 9, 23), last: d(1996, 9, 27) })
        );
    }

    #[test]
    fn last_examples() {
        assert_eq!(
            last(Target::Unit(CalendarUnit::Week), d(1996, 8, 20), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1996, 8, 12), last: d(1996, 8, 16) })
        );
        assert_eq!(
            last(Target::Weekday(Weekday::Thursday), d(1996, 9, 23), WeekConvention::MonFri),
            Resolved::Day(d(1996, 9, 19))
        );
        assert_eq!(
            last(Target::Unit(CalendarUnit::Weekend), d(1996, 9, 23), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1996, 9, 21), last: d(1996, 9, 22) })
        );
    }

    #[test]
    fn this_examples() {
        assert_eq!(
            this(Target::Unit(CalendarUnit::Week), d(1996, 8, 22), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1996, 8, 19), last: d(1996, 8, 23) })
        );
        assert_eq!(
            this(Target::Unit(CalendarUnit::Month), d(1996, 9, 23), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1996, 9, 1), last: d(1996, 9, 30) })
        );
        assert_eq!(
            this(Target::Unit(CalendarUnit::Weekend), d(1996, 9, 23), WeekConvention::MonFri),
            Resolved::Range(DateRange { first: d(1996, 9, 28), last: d(1996, 9, 29) })
        );
        assert_eq!(
            this(Target::Weekday(Weekday::Thursday), d(1993, 5, 10), WeekConvention::MonFri),
            Resolved::Day(d(1993, 5, 13))
        );
    }

    #[test]
    fn subrange_examples() {
        let week = DateRange { first: d(1996, 9, 23), last: d(1996, 9, 27) };
        assert_eq!(
            rest_of(week, d(1996, 9, 24)),
            Some(DateRange { first: d(1996, 9, 25), last: d(1996, 9, 27) })
        );
        let oct_week = DateRange { first: d(1996, 10, 7), last: d(1996, 10, 11) };
        assert_eq!(
            end_of_week(oct_week),
            Some(DateRange { first: d(1996, 10, 10), last: d(1996, 10, 11) })
        );
        assert_eq!(
            end_of_month(1996, 10),
            DateRange { first: d(1996, 10, 21), last: d(1996, 10, 31) }
        );
        // Nothing left of a week whose last day is the reference day.
        assert_eq!(rest_of(week, d(1996, 9, 27)), None);
    }

    #[test]
    fn nth_week_examples() {
        assert_eq!(
            nth_week_of_month(1996, 8, 3, WeekConvention::MonFri),
            Some(DateRange { first: d(1996, 8, 19), last: d(1996, 8, 23) })
        );
        assert_eq!(
            nth_week_of_month(1996, 10, 2, WeekConvention::MonFri),
            Some(DateRange { first: d(1996, 10, 14), last: d(1996, 10, 18) })
        );
        assert_eq!(nth_week_of_month(1996, 10, 5, WeekConvention::MonFri), None);
    }

    #[test]
    fn search_order_properties() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0003);
        let conv = WeekConvention::MonFri;
        for _ in 0..10_000 {
            let date = random_date(&mut rng);
            let wd = Weekday::from_index(rng.gen_range(0..7));
            let t = Target::Weekday(wd);
            let n = next(t, date, conv).start();
            assert!(n > date);
            assert!(next_incl_today(t, date, conv).start() >= date);
            let l = last(t, date, conv).start();
            assert!(l < date);
            assert!(last(t, n, conv).start() <= date);

            let week = next(Target::Unit(CalendarUnit::Week), date, conv).range();
            assert_eq!(week.first.weekday(), Weekday::Monday);
            assert_eq!(week.last.weekday(), Weekday::Friday);
            let wkend = next(Target::Unit(CalendarUnit::Weekend), date, conv).range();
            assert_eq!(wkend.first.weekday(), Weekday::Saturday);
            assert_eq!(wkend.last.weekday(), Weekday::Sunday);
            assert!(wkend.first > date);
        }
    }

    #[test]
    fn mon_sun_convention() {
        let week = this(Target::Unit(CalendarUnit::Week), d(1996, 9, 25), WeekConvention::MonSun).range();
        assert_eq!(week.first, d(1996, 9, 23));
        assert_eq!(week.last, d(1996, 9, 29));
        assert_eq!(week.last.weekday(), Weekday::Sunday);
    }
}

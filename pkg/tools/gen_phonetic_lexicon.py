#!/usr/bin/env python3
"""Regenerate pronunciations.tsv and word_frequencies.tsv.

The pronunciation lexicon has two layers:

* a hand-checked core of common words with dictionary-style stress-free
  ARPABET transcriptions (homophones like sea/see and weather/whether are
  transcribed identically on purpose);
* a mechanical supplement for every other word in the bundled POS lexicon,
  stopword list and filler inventory, produced by the package's
  letter-to-phoneme fallback so the whole tagging vocabulary can serve as
  candidates.

Frequencies are banded pseudo-counts, not corpus measurements: they only
need to order tie-breaks and exercise the loader's frequency threshold.
A few archaic words sit below the default threshold of 1000 so that
threshold filtering is observable.

Run from the repository root after gen_pos_lexicon.py:

    PYTHONPATH=src python3 tools/gen_phonetic_lexicon.py
"""

from __future__ import annotations

import json
from pathlib import Path

from slotperturb.phonetics import PHONEME_INVENTORY, grapheme_to_phonemes

RES = Path(__file__).resolve().parents[1] / "src/slotperturb/data"

TIER1_FREQ = 5_000_000   # ultra-common function words
CORE_FREQ = 150_000      # hand-transcribed content words
SUPPLEMENT_FREQ = 15_000  # rule-transcribed remainder
LOW_FREQ = 500           # below the default lexicon threshold

TIER1 = set("""
the to of and a in is it you that was for on are with as be at this from or
by but what all were we when your can there an which their if will how said
do
""".split())

#: word: SYM SYM ...  (hand-checked, stress digits removed)
CORE = """
the: DH AH
to: T UW
of: AH V
and: AE N D
a: AH
in: IH N
is: IH Z
it: IH T
you: Y UW
that: DH AE T
was: W AH Z
for: F AO R
on: AA N
are: AA R
with: W IH DH
as: AE Z
his: HH IH Z
they: DH EY
be: B IY
at: AE T
one: W AH N
have: HH AE V
this: DH IH S
from: F R AH M
or: AO R
had: HH AE D
by: B AY
hot: HH AA T
word: W ER D
but: B AH T
what: W AH T
some: S AH M
we: W IY
can: K AE N
out: AW T
other: AH DH ER
were: W ER
all: AO L
there: DH EH R
when: W EH N
up: AH P
use: Y UW Z
your: Y AO R
how: HH AW
said: S EH D
an: AE N
each: IY CH
she: SH IY
which: W IH CH
do: D UW
their: DH EH R
time: T AY M
if: IH F
will: W IH L
way: W EY
about: AH B AW T
many: M EH N IY
then: DH EH N
them: DH EH M
write: R AY T
would: W UH D
like: L AY K
so: S OW
these: DH IY Z
her: HH ER
long: L AO NG
make: M EY K
thing: TH IH NG
see: S IY
him: HH IH M
two: T UW
has: HH AE Z
look: L UH K
more: M AO R
day: D EY
could: K UH D
go: G OW
come: K AH M
did: D IH D
number: N AH M B ER
sound: S AW N D
no: N OW
most: M OW S T
people: P IY P AH L
my: M AY
over: OW V ER
know: N OW
water: W AO T ER
than: DH AE N
call: K AO L
first: F ER S T
who: HH UW
may: M EY
down: D AW N
side: S AY D
been: B IH N
now: N AW
find: F AY N D
any: EH N IY
new: N UW
work: W ER K
part: P AA R T
take: T EY K
get: G EH T
place: P L EY S
made: M EY D
live: L IH V
where: W EH R
after: AE F T ER
back: B AE K
little: L IH T AH L
only: OW N L IY
round: R AW N D
man: M AE N
year: Y IH R
came: K EY M
show: SH OW
every: EH V R IY
good: G UH D
me: M IY
give: G IH V
our: AW ER
under: AH N D ER
name: N EY M
very: V EH R IY
through: TH R UW
just: JH AH S T
form: F AO R M
great: G R EY T
think: TH IH NG K
say: S EY
help: HH EH L P
low: L OW
line: L AY N
turn: T ER N
cause: K AO Z
much: M AH CH
mean: M IY N
before: B IH F AO R
move: M UW V
right: R AY T
boy: B OY
old: OW L D
too: T UW
same: S EY M
tell: T EH L
does: D AH Z
set: S EH T
three: TH R IY
want: W AA N T
air: EH R
well: W EH L
also: AO L S OW
play: P L EY
small: S M AO L
end: EH N D
put: P UH T
home: HH OW M
read: R IY D
hand: HH AE N D
large: L AA R JH
spell: S P EH L
add: AE D
even: IY V AH N
land: L AE N D
here: HH IY R
must: M AH S T
big: B IH G
high: HH AY
such: S AH CH
follow: F AA L OW
act: AE K T
why: W AY
ask: AE S K
men: M EH N
change: CH EY N JH
went: W EH N T
light: L AY T
kind: K AY N D
off: AO F
need: N IY D
house: HH AW S
picture: P IH K CH ER
try: T R AY
us: AH S
again: AH G EH N
animal: AE N AH M AH L
point: P OY N T
mother: M AH DH ER
world: W ER L D
near: N IH R
build: B IH L D
self: S EH L F
earth: ER TH
father: F AA DH ER
head: HH EH D
stand: S T AE N D
own: OW N
page: P EY JH
should: SH UH D
country: K AH N T R IY
found: F AW N D
answer: AE N S ER
school: S K UW L
grow: G R OW
study: S T AH D IY
still: S T IH L
learn: L ER N
plant: P L AE N T
cover: K AH V ER
food: F UW D
sun: S AH N
four: F AO R
between: B IH T W IY N
state: S T EY T
keep: K IY P
eye: AY
never: N EH V ER
last: L AE S T
let: L EH T
thought: TH AO T
city: S IH T IY
tree: T R IY
cross: K R AO S
farm: F AA R M
hard: HH AA R D
start: S T AA R T
might: M AY T
story: S T AO R IY
saw: S AO
far: F AA R
sea: S IY
draw: D R AO
left: L EH F T
late: L EY T
run: R AH N
while: W AY L
press: P R EH S
close: K L OW S
night: N AY T
real: R IY L
life: L AY F
few: F Y UW
north: N AO R TH
open: OW P AH N
seem: S IY M
together: T AH G EH DH ER
next: N EH K S T
white: W AY T
children: CH IH L D R AH N
begin: B IH G IH N
got: G AA T
walk: W AO K
example: IH G Z AE M P AH L
paper: P EY P ER
group: G R UW P
always: AO L W EY Z
music: M Y UW Z IH K
those: DH OW Z
both: B OW TH
mark: M AA R K
often: AO F AH N
letter: L EH T ER
until: AH N T IH L
mile: M AY L
river: R IH V ER
car: K AA R
feet: F IY T
care: K EH R
second: S EH K AH N D
book: B UH K
carry: K AE R IY
took: T UH K
science: S AY AH N S
eat: IY T
room: R UW M
friend: F R EH N D
began: B IH G AE N
idea: AY D IY AH
fish: F IH SH
mountain: M AW N T AH N
stop: S T AA P
once: W AH N S
base: B EY S
hear: HH IY R
horse: HH AO R S
cut: K AH T
sure: SH UH R
watch: W AA CH
color: K AH L ER
face: F EY S
wood: W UH D
main: M EY N
enough: IH N AH F
plain: P L EY N
girl: G ER L
usual: Y UW ZH AH W AH L
young: Y AH NG
ready: R EH D IY
above: AH B AH V
ever: EH V ER
red: R EH D
list: L IH S T
though: DH OW
feel: F IY L
talk: T AO K
bird: B ER D
body: B AA D IY
dog: D AO G
song: S AO NG
door: D AO R
product: P R AA D AH K T
black: B L AE K
short: SH AO R T
class: K L AE S
wind: W IH N D
question: K W EH S CH AH N
happen: HH AE P AH N
complete: K AH M P L IY T
ship: SH IH P
area: EH R IY AH
half: HH AE F
rock: R AA K
order: AO R D ER
fire: F AY ER
south: S AW TH
problem: P R AA B L AH M
piece: P IY S
told: T OW L D
knew: N UW
pass: P AE S
since: S IH N S
top: T AA P
whole: HH OW L
king: K IH NG
street: S T R IY T
inch: IH N CH
nothing: N AH TH IH NG
course: K AO R S
stay: S T EY
wheel: W IY L
full: F UH L
force: F AO R S
blue: B L UW
decide: D IH S AY D
deep: D IY P
moon: M UW N
island: AY L AH N D
foot: F UH T
system: S IH S T AH M
busy: B IH Z IY
test: T EH S T
record: R EH K ER D
boat: B OW T
common: K AA M AH N
gold: G OW L D
possible: P AA S AH B AH L
plane: P L EY N
dry: D R AY
wonder: W AH N D ER
laugh: L AE F
thousand: TH AW Z AH N D
ago: AH G OW
ran: R AE N
check: CH EH K
game: G EY M
shape: SH EY P
miss: M IH S
brought: B R AO T
heat: HH IY T
snow: S N OW
bring: B R IH NG
yes: Y EH S
fill: F IH L
east: IY S T
paint: P EY N T
language: L AE NG G W AH JH
among: AH M AH NG
tune: T UW N
june: JH UW N
dune: D UW N
noon: N UW N
soon: S UW N
playlist: P L EY L IH S T
album: AE L B AH M
track: T R AE K
artist: AA R T AH S T
band: B AE N D
witch: W IH CH
rich: R IH CH
batch: B AE CH
match: M AE CH
catch: K AE CH
patch: P AE CH
pitch: P IH CH
switch: S W IH CH
sing: S IH NG
ring: R IH NG
wing: W IH NG
spring: S P R IH NG
string: S T R IH NG
movie: M UW V IY
flight: F L AY T
bright: B R AY T
sight: S AY T
fight: F AY T
tight: T AY T
hotel: HH OW T EH L
weather: W EH DH ER
whether: W EH DH ER
rain: R EY N
train: T R EY N
brain: B R EY N
grain: G R EY N
pain: P EY N
gain: G EY N
slow: S L OW
glow: G L OW
flow: F L OW
blow: B L OW
coffee: K AA F IY
tea: T IY
bee: B IY
meet: M IY T
meat: M IY T
week: W IY K
weak: W IY K
restaurant: R EH S T ER AA N T
pizza: P IY T S AH
burger: B ER G ER
salad: S AE L AH D
dinner: D IH N ER
winner: W IH N ER
lunch: L AH N CH
launch: L AO N CH
punch: P AH N CH
bunch: B AH N CH
branch: B R AE N CH
french: F R EH N CH
bench: B EH N CH
beach: B IY CH
peach: P IY CH
teach: T IY CH
reach: R IY CH
speech: S P IY CH
ticket: T IH K AH T
basket: B AE S K AH T
market: M AA R K AH T
rocket: R AA K AH T
pocket: P AA K AH T
jacket: JH AE K AH T
weekend: W IY K EH N D
morning: M AO R N IH NG
evening: IY V N IH NG
tonight: T AH N AY T
today: T AH D EY
tomorrow: T AH M AA R OW
yesterday: Y EH S T ER D EY
hour: AW ER
minute: M IH N AH T
alarm: AH L AA R M
clock: K L AA K
block: B L AA K
lock: L AA K
sock: S AA K
shock: SH AA K
stock: S T AA K
buy: B AY
bye: B AY
guy: G AY
pie: P AY
tie: T AY
die: D AY
fry: F R AY
cry: K R AY
fly: F L AY
sky: S K AY
hi: HH AY
sit: S IH T
bit: B IH T
fit: F IH T
hit: HH IH T
kit: K IH T
lit: L IH T
pit: P IH T
wit: W IH T
lake: L EY K
bake: B EY K
cake: K EY K
wake: W EY K
shake: SH EY K
snake: S N EY K
brake: B R EY K
break: B R EY K
mind: M AY N D
blind: B L AY N D
cook: K UH K
hook: HH UH K
shook: SH UH K
burn: B ER N
earn: ER N
cancel: K AE N S AH L
search: S ER CH
church: CH ER CH
listen: L IH S AH N
skip: S K IH P
trip: T R IH P
chip: CH IH P
shop: SH AA P
chop: CH AA P
drop: D R AA P
pop: P AA P
map: M AE P
cap: K AE P
tap: T AE P
gap: G AE P
lap: L AE P
nap: N AE P
app: AE P
cat: K AE T
hat: HH AE T
bat: B AE T
rat: R AE T
mat: M AE T
sat: S AE T
flat: F L AE T
chat: CH AE T
five: F AY V
six: S IH K S
seven: S EH V AH N
eight: EY T
nine: N AY N
ten: T EH N
okay: OW K EY
please: P L IY Z
thank: TH AE NG K
mind: M AY N D
away: AH W EY
"""

#: Archaic words kept below the default frequency threshold.
LOW = {
    "thee": "DH IY",
    "thou": "DH AW",
    "whence": "W EH N S",
    "hither": "HH IH DH ER",
    "betwixt": "B IH T W IH K S T",
}


def parse_core() -> dict[str, str]:
    entries: dict[str, str] = {}
    for line in CORE.strip().split("\n"):
        word, _, phones = line.partition(":")
        word, phones = word.strip(), phones.strip()
        bad = [s for s in phones.split() if s not in PHONEME_INVENTORY]
        if bad:
            raise SystemExit(f"{word!r}: unknown symbols {bad}")
        entries[word] = phones
    return entries


def supplement_words() -> set[str]:
    words: set[str] = set()
    for line in (RES / "pos_lexicon.tsv").read_text().split("\n"):
        if line.strip() and not line.startswith("#"):
            words.add(line.split("\t")[0])
    for line in (RES / "stopwords.txt").read_text().split("\n"):
        if line.strip() and not line.startswith("#"):
            words.add(line.strip())
    fillers = json.loads((RES / "fillers.json").read_text())
    for key in ("bos", "eos", "pre_verb", "post_verb"):
        for phrase in fillers[key]:
            words.update(w for w in phrase.split() if w.isalpha())
    words.add(fillers["failsafe_word"])
    return words


def main() -> None:
    core = parse_core()
    pron: dict[str, str] = dict(core)
    for w in sorted(supplement_words()):
        if w not in pron and w not in LOW and w.isalpha():
            pron[w] = str(grapheme_to_phonemes(w))
    pron.update(LOW)

    freq: dict[str, int] = {}
    for w in pron:
        if w in LOW:
            freq[w] = LOW_FREQ
        elif w in TIER1:
            freq[w] = TIER1_FREQ
        elif w in core:
            freq[w] = CORE_FREQ
        else:
            freq[w] = SUPPLEMENT_FREQ

    pron_lines = [
        "# Pronunciation lexicon: word<TAB>stress-free ARPABET symbols.",
        "# Generated by tools/gen_phonetic_lexicon.py: hand-checked core",
        "# plus rule-derived supplement.  Regenerate rather than patching.",
    ]
    pron_lines += [f"{w}\t{p}" for w, p in sorted(pron.items())]
    (RES / "pronunciations.tsv").write_text(
        "\n".join(pron_lines) + "\n", encoding="utf-8"
    )

    freq_lines = [
        "# Banded pseudo-frequencies: word<TAB>count.  Ordering matters",
        "# (tie-breaks, threshold filtering); magnitudes are nominal.",
    ]
    freq_lines += [f"{w}\t{c}" for w, c in sorted(freq.items())]
    (RES / "word_frequencies.tsv").write_text(
        "\n".join(freq_lines) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(pron)} pronunciations, {len(freq)} frequencies")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate src/slotperturb/data/pos_lexicon.tsv.

The lexicon is built from curated stem lists for the coarse classes the
tagger distinguishes, with inflected forms generated mechanically (verb
conjugations, noun plurals).  Words whose default suffix-rule tag would be
wrong (e.g. "red" is not a past tense, "family" is not an adverb) are listed
here so the lexicon entry wins over the rule.

Run from the repository root:

    python3 tools/gen_pos_lexicon.py
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / (
    "src/slotperturb/data/pos_lexicon.tsv"
)

_VOWELS = set("aeiou")

# Regular verb stems.  Forms (3rd person, past, gerund) are generated below;
# stems with irregular conjugations go in IRREGULAR_VERBS instead.
VERBS = """
add play watch purchase insert include view show book list like mix remove
delete create open close start stop pause resume skip shuffle repeat search
look listen dance ask call text share save download upload stream cast turn
adjust change switch move carry walk travel visit stay check reserve cancel
confirm order tip recommend suggest need want wish hope plan schedule remind
wake eat cook bake serve help try use pick select drop push pull lift raise
lower increase decrease reduce boost love hate enjoy prefer remember forget
learn study practice work rest relax join follow count measure weigh compare
fit happen begin end finish continue wait hurry rush copy paste print scan
update upgrade install restart mute dim clean wash fix repair destroy climb
jump ski skate surf hike camp locate navigate guide point paint place
apply reply supply steal heal seal reveal rate answer match
""".split()

# stem -> space-separated extra forms (the stem itself is always included).
IRREGULAR_VERBS = {
    "go": "goes went gone going",
    "come": "comes came coming",
    "get": "gets got gotten getting",
    "give": "gives gave given giving",
    "take": "takes took taken taking",
    "make": "makes made making",
    "put": "puts putting",
    "let": "lets letting",
    "set": "sets setting",
    "cut": "cuts cutting",
    "shut": "shuts shutting",
    "hit": "hits hitting",
    "see": "sees saw seen seeing",
    "hear": "hears heard hearing",
    "find": "finds found finding",
    "tell": "tells told telling",
    "say": "says said saying",
    "know": "knows knew known knowing",
    "think": "thinks thought thinking",
    "buy": "buys bought buying",
    "bring": "brings brought bringing",
    "catch": "catches caught catching",
    "teach": "teaches taught teaching",
    "read": "reads reading",
    "write": "writes wrote written writing",
    "ride": "rides rode ridden riding",
    "drive": "drives drove driven driving",
    "fly": "flies flew flown flying",
    "run": "runs ran running",
    "sing": "sings sang sung singing",
    "drink": "drinks drank drunk drinking",
    "sleep": "sleeps slept sleeping",
    "pay": "pays paid paying",
    "send": "sends sent sending",
    "spend": "spends spent spending",
    "build": "builds built building",
    "lose": "loses lost losing",
    "win": "wins won winning",
    "meet": "meets met meeting",
    "keep": "keeps kept keeping",
    "hold": "holds held holding",
    "leave": "leaves left leaving",
    "feel": "feels felt feeling",
    "break": "breaks broke broken breaking",
    "choose": "chooses chose chosen choosing",
    "speak": "speaks spoke spoken speaking",
    "wear": "wears wore worn wearing",
    "throw": "throws threw thrown throwing",
    "grow": "grows grew grown growing",
    "lead": "leads led leading",
    "feed": "feeds fed feeding",
    "swim": "swims swam swum swimming",
    "understand": "understands understood understanding",
}

NOUNS = """
music song tune melody playlist album track artist band singer musician dj
radio station jazz rock pop rap blues country folk metal punk soul funk
reggae techno disco opera symphony orchestra concert genre guitar piano drum
violin flute trumpet speaker volume sound audio video clip chorus verse beat
rhythm tempo hit single record vinyl
movie film cinema theater theatre trailer actor actress director scene
screen ticket seat row showtime series episode season character plot
novel story author writer poem magazine newspaper article page chapter
library review
restaurant cafe bar pub diner bistro food meal dinner lunch breakfast brunch
dessert snack dish cuisine menu table reservation chef waiter pizza pasta
burger sandwich salad soup steak sushi taco burrito noodle bread cheese
butter egg bacon chicken beef pork fish rice shrimp lobster oyster wine beer
coffee tea juice soda water milk cocktail whiskey cake cookie pie donut ice
cream chocolate fruit apple banana grape lemon lime mango peach berry
strawberry vegetable potato tomato onion garlic pepper salt sugar spice
sauce present gift
flight plane airplane airport airline trip journey vacation holiday hotel
motel hostel room suite luggage baggage suitcase passport visa train bus
taxi cab car rental subway metro ferry boat cruise platform gate terminal
departure arrival destination city town village state capital map route road
street avenue highway bridge tunnel beach mountain lake river island park
museum gallery monument landmark zoo aquarium stadium arena mall store shop
market supermarket pharmacy hospital clinic doctor dentist school university
college church temple
weather forecast temperature degree rain snow wind storm thunder lightning
cloud sky sun moon star fog mist hail blizzard hurricane tornado humidity
climate spring summer autumn fall winter
time hour minute second day date week weekend month year morning evening
afternoon night midnight noon calendar alarm reminder timer clock
appointment meeting event party birthday anniversary wedding
name number phone email message address contact friend family mom dad
mother father brother sister son daughter kid child children person people
man woman men women boy girl guy neighbor colleague boss team player game
news headline sport football soccer basketball baseball tennis golf hockey
cricket rugby volleyball gym workout exercise yoga
item thing device laptop computer tablet charger battery light lamp fan
heater thermostat door window lock key garage curtain blind television
channel remote camera bulb outlet
question problem issue idea option choice detail information info price
cost fee discount deal sale tax bill receipt budget money cash card credit
account balance payment
animal festival signal journal canal medal sandal crystal carnival proposal
funeral cereal material king ring string wing ceiling sibling belly jelly
feeling painting
bed speed seed weed deed shed olive
""".split()

#: Number words, weekdays, months and place names: lexicalized as nouns but
#: never pluralized.
PROPER_NOUNS = """
one two three four five six seven eight nine ten eleven twelve twenty
thirty hundred thousand million
monday tuesday wednesday thursday friday saturday sunday january february
march april june july august september october november december
italy france china mexico india japan america england canada spain germany
greece korea vietnam turkey london paris tokyo york boston chicago vegas
""".split()

#: Mass nouns, lexicalized plurals, and other stems that take no "-s" form.
NO_PLURAL = set("""
music jazz rock pop rap blues country folk metal punk soul funk reggae
techno disco weather rain snow wind fog mist hail humidity luggage baggage
bread cheese butter bacon beef pork rice sushi coffee tea milk money cash
information info news yoga ice cream men women children people furniture
sports audio chocolate salt sugar thunder lightning weekend series
""".split())

#: Nouns ending in "o" that pluralize with "-es".
O_PLURAL_ES = {"potato", "tomato"}

ADJECTIVES = """
good bad new old big small large giant huge tiny great fresh cool warm hot
cold nice fine best worst top popular famous favorite free cheap expensive
close closest nearest next last first final quick slow loud quiet soft
happy sad funny scary dark bright sunny rainy cloudy windy snowy foggy
stormy humid dry wet clear open full empty busy available italian french
chinese mexican indian thai japanese american british canadian spanish
german greek korean vietnamese turkish vegetarian vegan romantic classic
classical acoustic instrumental electronic digital original extended deluxe
strong high low short long tall deep shallow wide narrow red sacred naked
tired bored excited crowded closed friendly early likely lovely daily
weekly monthly yearly silly ugly holy live top rated animated
""".split()

ADVERBS = """
fast well soon often always sometimes usually already almost maybe perhaps
today tomorrow tonight yesterday together away everywhere somewhere
anywhere nowhere online outside inside abroad twice never ever quite
rather really instead anyway indeed ahead apart aside downtown nearby
overseas please also still
""".split()

#: Applied last; wins over any generated form (e.g. verb gerunds that are
#: far more common as nouns).
OVERRIDES = {
    "feeling": "NOUN",
    "meeting": "NOUN",
    "building": "NOUN",
    "painting": "NOUN",
    "wedding": "NOUN",
}


def verb_forms(stem: str) -> set[str]:
    """Regular conjugation: 3rd person singular, past, gerund."""
    forms = {stem}
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(stem + "es")
    elif stem.endswith("y") and stem[-2] not in _VOWELS:
        forms.add(stem[:-1] + "ies")
    else:
        forms.add(stem + "s")
    if stem.endswith("e"):
        forms.add(stem + "d")
        forms.add(stem[:-1] + "ing")
    elif stem.endswith("y") and stem[-2] not in _VOWELS:
        forms.add(stem[:-1] + "ied")
        forms.add(stem + "ing")
    elif _doubles_final(stem):
        forms.add(stem + stem[-1] + "ed")
        forms.add(stem + stem[-1] + "ing")
    else:
        forms.add(stem + "ed")
        forms.add(stem + "ing")
    return forms


def _doubles_final(stem: str) -> bool:
    """Monosyllabic consonant-vowel-consonant stems double the final letter
    (stop -> stopped) except after w/x/y (mix -> mixed)."""
    if len(stem) < 3 or stem[-1] in _VOWELS or stem[-1] in "wxy":
        return False
    if stem[-2] not in _VOWELS:
        return False
    groups = 0
    prev_vowel = False
    for c in stem:
        is_vowel = c in _VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    return groups == 1


def plural(noun: str) -> str | None:
    if noun in NO_PLURAL:
        return None
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    if noun in O_PLURAL_ES:
        return noun + "es"
    return noun + "s"


def main() -> None:
    lex: dict[str, str] = {}
    for w in ADVERBS:
        lex[w] = "ADV"
    for w in ADJECTIVES:
        lex[w] = "ADJ"
    for w in NOUNS:
        lex[w] = "NOUN"
        p = plural(w)
        if p is not None:
            lex[p] = "NOUN"
    for w in PROPER_NOUNS:
        lex[w] = "NOUN"
    for stem in VERBS:
        for form in verb_forms(stem):
            lex[form] = "VERB"
    for stem, extra in IRREGULAR_VERBS.items():
        lex[stem] = "VERB"
        for form in extra.split():
            lex[form] = "VERB"
    lex.update(OVERRIDES)

    lines = [
        "# Coarse part-of-speech lexicon: word<TAB>CLASS, lowercase, one",
        "# entry per word.  Generated by tools/gen_pos_lexicon.py; edit the",
        "# word lists there and regenerate rather than patching this file.",
    ]
    lines += [f"{w}\t{t}" for w, t in sorted(lex.items())]
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lex)} entries to {OUT}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerates the bundled morphology tables and the desk-scale fixture resources.

Outputs (relative to crates/core/data):
  morph/tags.tsv        word<TAB>TAG[,TAG...]
  morph/roundtrip.tsv   surface<TAB>TAG<TAB>lemma
  fixtures/corpus.txt   one tokenized sentence per line
  fixtures/thesaurus.tsv
  fixtures/vectors.txt
  fixtures/lexicon.tsv
  fixtures/eval/{orig,system,ref0,ref1}.txt

All surface forms below are typed out by hand; nothing is produced by
applying inflection rules, so the Rust morphology is checked against real
English rather than against itself.
"""
import collections
import math
import os
import random

ROOT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data")

# lemma | third-singular | past | past participle | present participle
VERBS = """
look|looks|looked|looked|looking
go|goes|went|gone|going
situate|situates|situated|situated|situating
enclose|encloses|enclosed|enclosed|enclosing
wrap|wraps|wrapped|wrapped|wrapping
cover|covers|covered|covered|covering
surround|surrounds|surrounded|surrounded|surrounding
locate|locates|located|located|locating
place|places|placed|placed|placing
find|finds|found|found|finding
award|awards|awarded|awarded|awarding
grant|grants|granted|granted|granting
present|presents|presented|presented|presenting
receive|receives|received|received|receiving
make|makes|made|made|making
take|takes|took|taken|taking
give|gives|gave|given|giving
see|sees|saw|seen|seeing
run|runs|ran|run|running
stop|stops|stopped|stopped|stopping
plan|plans|planned|planned|planning
hop|hops|hopped|hopped|hopping
hope|hopes|hoped|hoped|hoping
try|tries|tried|tried|trying
carry|carries|carried|carried|carrying
study|studies|studied|studied|studying
play|plays|played|played|playing
enjoy|enjoys|enjoyed|enjoyed|enjoying
stay|stays|stayed|stayed|staying
obey|obeys|obeyed|obeyed|obeying
die|dies|died|died|dying
tie|ties|tied|tied|tying
agree|agrees|agreed|agreed|agreeing
free|frees|freed|freed|freeing
begin|begins|began|begun|beginning
start|starts|started|started|starting
commence|commences|commenced|commenced|commencing
write|writes|wrote|written|writing
speak|speaks|spoke|spoken|speaking
know|knows|knew|known|knowing
think|thinks|thought|thought|thinking
bring|brings|brought|brought|bringing
buy|buys|bought|bought|buying
purchase|purchases|purchased|purchased|purchasing
get|gets|got|gotten|getting
obtain|obtains|obtained|obtained|obtaining
gain|gains|gained|gained|gaining
acquire|acquires|acquired|acquired|acquiring
teach|teaches|taught|taught|teaching
catch|catches|caught|caught|catching
keep|keeps|kept|kept|keeping
leave|leaves|left|left|leaving
feel|feels|felt|felt|feeling
tell|tells|told|told|telling
say|says|said|said|saying
pay|pays|paid|paid|paying
have|has|had|had|having
do|does|did|done|doing
put|puts|put|put|putting
cut|cuts|cut|cut|cutting
set|sets|set|set|setting
build|builds|built|built|building
construct|constructs|constructed|constructed|constructing
forget|forgets|forgot|forgotten|forgetting
admit|admits|admitted|admitted|admitting
occur|occurs|occurred|occurred|occurring
prefer|prefers|preferred|preferred|preferring
control|controls|controlled|controlled|controlling
visit|visits|visited|visited|visiting
open|opens|opened|opened|opening
happen|happens|happened|happened|happening
offer|offers|offered|offered|offering
listen|listens|listened|listened|listening
fix|fixes|fixed|fixed|fixing
mix|mixes|mixed|mixed|mixing
pass|passes|passed|passed|passing
push|pushes|pushed|pushed|pushing
watch|watches|watched|watched|watching
wash|washes|washed|washed|washing
miss|misses|missed|missed|missing
use|uses|used|used|using
utilize|utilizes|utilized|utilized|utilizing
employ|employs|employed|employed|employing
create|creates|created|created|creating
include|includes|included|included|including
require|requires|required|required|requiring
need|needs|needed|needed|needing
want|wants|wanted|wanted|wanting
provide|provides|provided|provided|providing
decide|decides|decided|decided|deciding
change|changes|changed|changed|changing
move|moves|moved|moved|moving
live|lives|lived|lived|living
love|loves|loved|loved|loving
argue|argues|argued|argued|arguing
continue|continues|continued|continued|continuing
replace|replaces|replaced|replaced|replacing
simplify|simplifies|simplified|simplified|simplifying
apply|applies|applied|applied|applying
explain|explains|explained|explained|explaining
contain|contains|contained|contained|containing
remain|remains|remained|remained|remaining
compare|compares|compared|compared|comparing
consider|considers|considered|considered|considering
answer|answers|answered|answered|answering
enter|enters|entered|entered|entering
limit|limits|limited|limited|limiting
perform|performs|performed|performed|performing
assist|assists|assisted|assisted|assisting
help|helps|helped|helped|helping
aid|aids|aided|aided|aiding
terminate|terminates|terminated|terminated|terminating
end|ends|ended|ended|ending
finish|finishes|finished|finished|finishing
demonstrate|demonstrates|demonstrated|demonstrated|demonstrating
show|shows|showed|shown|showing
prove|proves|proved|proved|proving
attempt|attempts|attempted|attempted|attempting
cook|cooks|cooked|cooked|cooking
bathe|bathes|bathed|bathed|bathing
base|bases|based|based|basing
prepare|prepares|prepared|prepared|preparing
determine|determines|determined|determined|determining
inform|informs|informed|informed|informing
reside|resides|resided|resided|residing
dwell|dwells|dwelled|dwelled|dwelling
work|works|worked|worked|working
walk|walks|walked|walked|walking
"""

# singular | plural
NOUNS = """
cat|cats
dog|dogs
city|cities
town|towns
box|boxes
church|churches
dish|dishes
class|classes
glass|glasses
process|processes
tax|taxes
match|matches
wish|wishes
fox|foxes
leaf|leaves
knife|knives
wife|wives
thief|thieves
wolf|wolves
half|halves
shelf|shelves
child|children
man|men
woman|women
person|people
foot|feet
tooth|teeth
mouse|mice
goose|geese
potato|potatoes
tomato|tomatoes
hero|heroes
photo|photos
piano|pianos
radio|radios
day|days
key|keys
boy|boys
toy|toys
baby|babies
party|parties
country|countries
story|stories
ingredient|ingredients
element|elements
component|components
constituent|constituents
cuisine|cuisines
recipient|recipients
receiver|receivers
winner|winners
host|hosts
heir|heirs
medal|medals
coast|coasts
sea|seas
house|houses
horse|horses
course|courses
case|cases
prize|prizes
size|sizes
roof|roofs
chief|chiefs
belief|beliefs
cliff|cliffs
base|bases
book|books
idea|ideas
area|areas
place|places
problem|problems
result|results
system|systems
method|methods
word|words
sentence|sentences
language|languages
question|questions
student|students
teacher|teachers
doctor|doctors
physician|physicians
vehicle|vehicles
car|cars
residence|residences
home|homes
individual|individuals
sheep|sheep
fish|fish
analysis|analyses
crisis|crises
quiz|quizzes
meal|meals
recipe|recipes
factor|factors
part|parts
"""

# positive | comparative | superlative ; single entry means non-gradable
ADJECTIVES = """
big|bigger|biggest
happy|happier|happiest
good|better|best
bad|worse|worst
simple|simpler|simplest
large|larger|largest
fast|faster|fastest
hot|hotter|hottest
easy|easier|easiest
close|closer|closest
great|greater|greatest
small|smaller|smallest
new|newer|newest
old|older|oldest
young|younger|youngest
strong|stronger|strongest
long|longer|longest
short|shorter|shortest
high|higher|highest
low|lower|lowest
cheap|cheaper|cheapest
clear|clearer|clearest
wide|wider|widest
safe|safer|safest
nice|nicer|nicest
late|later|latest
fine|finer|finest
thin|thinner|thinnest
wet|wetter|wettest
sad|sadder|saddest
busy|busier|busiest
heavy|heavier|heaviest
pretty|prettier|prettiest
quiet|quieter|quietest
hard|harder|hardest
tough|tougher|toughest
huge|huger|hugest
vast|vaster|vastest
glad|gladder|gladdest
vital
necessary
indispensable
essential
crucial
critical
important
difficult
basic
enormous
numerous
several
sufficient
enough
needed
required
greek
key
"""

ADVERBS = """
fast|faster|fastest
hard|harder|hardest
early|earlier|earliest
soon|sooner|soonest
well|better|best
often
frequently
rapidly
quickly
approximately
about
roughly
around
also
very
"""

OTHER = """
the a an is are was were be been being of in on at to for with by from and or but
it its he she they we you i this that these those his her their our my your him them us me
not since where when which who whom whose what there here as than then so will would can
could may might must shall should if because while after before into over under between
through during without within all some any no each every many much more most other such
only own same few both either neither one two three up down out off again further once
, . ; : ! ? ' " ( ) - 's
""".split()

MULTI_TAGS = {
    "look": ["VERB", "NOUN"],
    "cook": ["VERB", "NOUN"],
    "base": ["NOUN", "VERB"],
    "place": ["NOUN", "VERB"],
    "end": ["NOUN", "VERB"],
    "help": ["VERB", "NOUN"],
    "aid": ["NOUN", "VERB"],
    "set": ["VERB", "NOUN"],
    "present": ["VERB", "ADJ", "NOUN"],
    "answer": ["NOUN", "VERB"],
    "change": ["NOUN", "VERB"],
    "show": ["VERB", "NOUN"],
    "fast": ["ADJ", "ADV"],
    "hard": ["ADJ", "ADV"],
    "key": ["NOUN", "ADJ"],
    "home": ["NOUN"],
    "house": ["NOUN"],
    "watch": ["VERB", "NOUN"],
    "work": ["VERB", "NOUN"],
    "walk": ["VERB", "NOUN"],
    "wish": ["NOUN", "VERB"],
    "match": ["NOUN", "VERB"],
    "fix": ["VERB", "NOUN"],
    "mix": ["VERB", "NOUN"],
    "need": ["VERB", "NOUN"],
    "use": ["VERB", "NOUN"],
    "stop": ["VERB", "NOUN"],
    "start": ["VERB", "NOUN"],
    "love": ["VERB", "NOUN"],
    "attempt": ["VERB", "NOUN"],
    "limit": ["NOUN", "VERB"],
    "visit": ["VERB", "NOUN"],
    "offer": ["VERB", "NOUN"],
    "pass": ["VERB", "NOUN"],
    "push": ["VERB", "NOUN"],
    "result": ["NOUN", "VERB"],
    "control": ["NOUN", "VERB"],
    "plan": ["NOUN", "VERB"],
    "cover": ["VERB", "NOUN"],
    "play": ["VERB", "NOUN"],
    "run": ["VERB", "NOUN"],
    "study": ["NOUN", "VERB"],
    "hope": ["NOUN", "VERB"],
    "well": ["ADV", "ADJ"],
    "about": ["OTHER", "ADV"],
    "around": ["OTHER", "ADV"],
    "also": ["ADV"],
    "very": ["ADV"],
    "free": ["ADJ", "VERB"],
    "open": ["ADJ", "VERB"],
    "close": ["ADJ", "VERB"],
    "clear": ["ADJ", "VERB"],
    "enough": ["ADJ", "ADV"],
    "cooking": ["NOUN"],
    "cookery": ["NOUN"],
    "food": ["NOUN"],
    "oregano": ["NOUN"],
    "cooking": ["NOUN"],
    "preparation": ["NOUN"],
    "stralsund": ["NOUN"],
    "baltic": ["ADJ"],
    "medal": ["NOUN"],
    "award": ["NOUN", "VERB"],
}


def paradigms(block):
    return [line.split("|") for line in block.strip().splitlines() if line.strip()]


def write(path, lines):
    full = os.path.join(ROOT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")


def morphology():
    tags = collections.OrderedDict()
    roundtrip = []

    def add_tag(word, tag):
        tags.setdefault(word, [])
        if tag not in tags[word]:
            tags[word].append(tag)

    for forms in paradigms(VERBS):
        add_tag(forms[0], "VERB")
        for surface in dict.fromkeys(forms):
            roundtrip.append((surface, "VERB", forms[0]))
    for forms in paradigms(NOUNS):
        add_tag(forms[0], "NOUN")
        for surface in dict.fromkeys(forms):
            roundtrip.append((surface, "NOUN", forms[0]))
    for forms in paradigms(ADJECTIVES):
        add_tag(forms[0], "ADJ")
        for surface in dict.fromkeys(forms):
            roundtrip.append((surface, "ADJ", forms[0]))
    for forms in paradigms(ADVERBS):
        add_tag(forms[0], "ADV")
        for surface in dict.fromkeys(forms):
            roundtrip.append((surface, "ADV", forms[0]))
    for word in OTHER:
        add_tag(word, "OTHER")
    for word, ts in MULTI_TAGS.items():
        tags[word] = list(ts)

    write(
        "morph/tags.tsv",
        ["# word\tTAG[,TAG...]; the first tag is the default"]
        + [f"{w}\t{','.join(t)}" for w, t in tags.items()],
    )
    write(
        "morph/roundtrip.tsv",
        ["# surface\tTAG\tlemma"] + [f"{s}\t{t}\t{l}" for s, t, l in roundtrip],
    )
    return len(roundtrip)


# ---------------------------------------------------------------------------
# Fixture corpus. Words in RARE must appear at most twice (the fixture
# classifier labels words with fewer than three occurrences as complex);
# words in COMMON must appear at least three times.

CORPUS = """
oregano is an indispensable ingredient in greek cuisine .
the food in this town is good and the cooking is simple .
it is necessary to eat good food every day .
water is necessary for every living thing .
sleep is necessary for a long and happy life .
it is necessary to have a plan before you start .
a good plan is necessary for the work .
the plan is necessary and the work is necessary too .
salt is a vital part of good cooking .
the heart is a vital part of the body .
water is vital for the town .
food is vital for the people .
a good teacher is essential for the students .
fresh food is essential for good cooking .
the key element of the story is the house .
water is essential for the town .
water is an element of the sea .
each element of the plan is simple .
the element in the box is small .
the main component of the car is old .
one component of the system is new .
a component of the book is missing .
the cooking in this house is good .
my mother likes cooking for the family .
cooking is a simple way to make food .
the cooking class starts at noon .
we had good food at the party .
the food was hot and the house was warm .
the winner of the prize was happy .
the winner got a big prize .
she was the winner of the race .
the receiver of the letter was a student .
the receiver took the book home .
a receiver was in the house .
the host of the party was a good man .
the host gave food to the people .
our host was very happy .
the house is located near the sea .
the town is located on the coast .
the school is located in the city .
the car is placed near the house .
the book was placed on the table .
the box was placed in the car .
the sun was set in the sky .
the table was set for the meal .
it was set near the town .
the wall surrounds the city .
the sea surrounds the town .
a big garden surrounds the house .
she wraps the box with paper .
he wraps the food for the trip .
the cloth wraps the bread .
snow covers the town in winter .
the paper covers the table .
a big roof covers the house .
the children play in the house .
the children like good food .
the people in the city are happy .
the people like the new car .
many people live in the city .
we begin the work at noon .
we begin the day with food .
they begin the class again .
we start the car in the morning .
they start the work again .
we start the day with a walk .
we buy food in the town .
they buy a new car .
i buy books for the class .
we get food from the shop .
they get a prize for the work .
you get a book from the teacher .
we help the people in the city .
they help the children at home .
the teacher can help the students .
there are several books on the table .
several people were in the house .
several students like the class .
we have enough food for the party .
there is enough water in the town .
they have enough time for the work .
the walk takes about an hour .
the town is about a mile from the sea .
it costs about ten dollars .
there are people around the house .
we walk around the town .
the children run around the table .
the house is our home .
the city is my home .
she went home after the class .
we live in a big house .
the house is near the sea .
this house is very old .
we use the car every day .
they use water for cooking .
people use books in the class .
the class will end at noon .
the story has a happy end .
the work will end soon .
we stop the car near the house .
they stop the work at noon .
please stop the car .
we finish the work at noon .
they finish the book .
i finish the meal .
the town has a huge house .
a huge dog was in the car .
the huge sea was blue .
the dog is big and the cat is small .
a big house is near the sea .
the big city is busy .
the large house is old .
a large dog was in the house .
the large car is new .
we go there often .
the children often play in the house .
she often reads books .
the dog runs quickly .
they walk quickly to the house .
the students learn quickly .
the car is fast .
the dog runs fast .
he works fast .
the doctor is in the house .
the doctor helps the people .
a good doctor is kind .
the car is red .
we have a new car .
the car was old .
the students show the book to the teacher .
the teacher will show the way .
they show the new house .
the work is hard .
the class is hard for the students .
it is hard to find a good house .
the man was tough .
the work was tough .
it was a tough day .
the man gave the boy a book .
the people gave food to the children .
we gave the prize to the winner .
the students are in the class .
the teacher and the students are happy .
the book is on the table .
the sea is blue and the sky is blue .
the city is big and busy .
the children are happy in the town .
the house is the home of a happy family .
the family lives in the town .
they live in the house near the sea .
we like the town and the people .
the city has many people .
the town has a good school .
the students read books in the school .
the teacher reads a story .
it is a good story .
this is a simple plan .
the plan is good .
we have a plan for the day .
the family has a dog .
the dog is in the house .
the cat is on the table .
the man is at home .
the woman is at work .
the woman has a car .
the boy has a book .
the school is near the house .
the town is near the city .
since the day was hot , the people went to the sea .
where is the house ?
the water is cold .
the morning was cold and the day was warm .
a key is on the table .
the key to the house is in the box .
the party was at the house of the host .
the recipient of the medal was a student .
the city is situated on the coast .
the crucial part of the plan is simple .
the constituent of the food is salt .
the cookery book is on the table .
"""

RARE = [
    "indispensable", "ingredient", "cuisine", "recipient", "situated", "encloses",
    "crucial", "constituent", "cookery", "oregano", "greek",
]
COMMON = [
    "necessary", "vital", "essential", "element", "component", "cooking", "food",
    "winner", "receiver", "host", "located", "placed", "set", "surrounds", "wraps",
    "covers", "people", "begin", "start", "buy", "get", "help", "several", "enough",
    "about", "around", "home", "house", "use", "end", "stop", "finish", "huge", "big",
    "large", "often", "quickly", "fast", "doctor", "car", "show", "hard", "tough",
    "the", "a", "an", "is", "in", "of", "and", "for", "to", "it", "on", "was", ".",
]


def corpus():
    lines = [l.strip() for l in CORPUS.strip().splitlines() if l.strip()]
    counts = collections.Counter(t for l in lines for t in l.split())
    for w in RARE:
        assert counts[w] <= 2, (w, counts[w])
    for w in COMMON:
        assert counts[w] >= 3, (w, counts[w])
    # ordering that the Table 5 Ex. 1 fixture relies on
    assert counts["necessary"] > counts["vital"] > counts["essential"], counts
    assert counts["element"] > counts["component"]
    write("fixtures/corpus.txt", lines)
    return lines, counts


THESAURUS = """
indispensable	adj	2	necessary,vital,essential,crucial
essential	adj	3	necessary,vital,basic,key
necessary	adj	2	needed,required,essential,indispensable
vital	adj	3	essential,necessary,crucial,key
crucial	adj	2	vital,critical,key,essential
ingredient	noun	2	element,component,constituent
element	noun	4	part,component,factor,ingredient
component	noun	2	part,element,constituent
cuisine	noun	1	cooking,cookery,food
cooking	noun	1	cookery,cuisine
recipient	noun	1	receiver,winner,heir,host
receiver	noun	2	recipient,heir
winner	noun	1	victor,champion
situate	verb	2	locate,place,set
locate	verb	3	find,place,situate
enclose	verb	2	surround,wrap,cover,fence in
award	verb	2	give,grant,present
award	noun	2	prize,medal
commence	verb	1	begin,start
begin	verb	3	start,commence
purchase	verb	1	buy,get
purchase	noun	1	buy,acquisition
obtain	verb	2	get,gain,acquire
assist	verb	1	help,aid
numerous	adj	1	several,many
sufficient	adj	1	enough,adequate
approximately	adv	1	about,roughly,around
residence	noun	2	home,house,dwelling
individual	noun	2	person,human
utilize	verb	1	use,employ
terminate	verb	2	end,stop,finish
enormous	adj	1	huge,big,large,vast
frequently	adv	1	often
rapidly	adv	1	quickly,fast
physician	noun	1	doctor
vehicle	noun	2	car
demonstrate	verb	3	show,prove
difficult	adj	2	hard,tough
big	adj	5	large,huge
large	adj	3	big,huge
house	noun	4	home,residence
look	verb	5	see,watch
look	noun	2	appearance,glance
"""


def thesaurus():
    lines = [l for l in THESAURUS.strip().splitlines()]
    write("fixtures/thesaurus.tsv", ["# lemma\tpos\tsense_count\tsynonyms"] + lines)
    return lines


# (target surface, synonym surface, cosine); vectors are synthesized so these
# pairwise cosines hold approximately. Anything not listed gets a random vector.
RELATIONS = [
    ("indispensable", "necessary", 0.82), ("indispensable", "vital", 0.78),
    ("indispensable", "essential", 0.45), ("indispensable", "crucial", 0.40),
    ("ingredient", "element", 0.72), ("ingredient", "component", 0.55),
    ("ingredient", "constituent", 0.50),
    ("cuisine", "cooking", 0.80), ("cuisine", "cookery", 0.75), ("cuisine", "food", 0.40),
    ("recipient", "receiver", 0.70), ("recipient", "winner", 0.65),
    ("recipient", "heir", 0.30), ("recipient", "host", 0.68),
    ("situated", "located", 0.85), ("situated", "placed", 0.60), ("situated", "set", 0.35),
    ("encloses", "surrounds", 0.80), ("encloses", "wraps", 0.60), ("encloses", "covers", 0.50),
    ("awarded", "given", 0.70), ("awarded", "granted", 0.75), ("awarded", "presented", 0.50),
    ("commence", "begin", 0.80), ("commence", "start", 0.78),
    ("purchase", "buy", 0.85), ("purchase", "get", 0.50),
    ("assist", "help", 0.90), ("assist", "aid", 0.60),
    ("numerous", "several", 0.80),
    ("sufficient", "enough", 0.85),
    ("approximately", "about", 0.70), ("approximately", "roughly", 0.80),
    ("approximately", "around", 0.68),
    ("residence", "home", 0.75), ("residence", "house", 0.73), ("residence", "dwelling", 0.40),
    ("utilize", "use", 0.90), ("utilize", "employ", 0.60),
    ("terminate", "end", 0.80), ("terminate", "stop", 0.70), ("terminate", "finish", 0.50),
    ("enormous", "huge", 0.90), ("enormous", "big", 0.60), ("enormous", "large", 0.70),
    ("enormous", "vast", 0.50),
    ("frequently", "often", 0.90),
    ("rapidly", "quickly", 0.88), ("rapidly", "fast", 0.60),
    ("physician", "doctor", 0.92),
    ("vehicle", "car", 0.85),
    ("demonstrate", "show", 0.80), ("demonstrate", "prove", 0.50),
    ("demonstrates", "shows", 0.80), ("demonstrates", "proves", 0.50),
    ("difficult", "hard", 0.75), ("difficult", "tough", 0.70),
]
DIM = 16


def vectors(vocab):
    rng = random.Random(20240601)

    def rand_unit():
        v = [rng.gauss(0, 1) for _ in range(DIM)]
        n = math.sqrt(sum(x * x for x in v))
        return [x / n for x in v]

    vecs = {}
    targets = []
    for t, _, _ in RELATIONS:
        if t not in vecs:
            vecs[t] = rand_unit()
            targets.append(t)
    for t, s, c in RELATIONS:
        if s in vecs:
            continue
        base = vecs[t]
        r = rand_unit()
        # remove the component along the target so r is orthogonal to it
        dot = sum(a * b for a, b in zip(r, base))
        r = [a - dot * b for a, b in zip(r, base)]
        n = math.sqrt(sum(x * x for x in r))
        r = [x / n for x in r]
        vecs[s] = [c * a + math.sqrt(1 - c * c) * b for a, b in zip(base, r)]
    for w in sorted(vocab):
        if w not in vecs and any(ch.isalpha() for ch in w):
            vecs[w] = rand_unit()
    lines = [f"{len(vecs)} {DIM}"]
    for w, v in vecs.items():
        lines.append(w + " " + " ".join(f"{x:.6f}" for x in v))
    write("fixtures/vectors.txt", lines)


LEXICON_RARE = {
    "indispensable": 5.2, "ingredient": 4.1, "cuisine": 4.6, "recipient": 4.8,
    "situated": 4.4, "encloses": 4.9, "crucial": 3.9, "constituent": 5.5,
    "cookery": 4.2, "oregano": 5.0, "commence": 4.5, "purchase": 3.6, "obtain": 3.8,
    "assist": 3.4, "numerous": 3.7, "sufficient": 4.0, "approximately": 4.3,
    "residence": 4.0, "utilize": 4.7, "terminate": 4.6, "enormous": 3.5,
    "frequently": 3.6, "rapidly": 3.3, "physician": 4.4, "vehicle": 3.2,
    "demonstrate": 4.1, "difficult": 3.0, "individual": 3.4, "acquisition": 5.1,
    "adequate": 4.3, "dwelling": 4.4, "victor": 4.0, "champion": 3.1, "heir": 3.9,
    "appearance": 3.3, "glance": 3.5, "critical": 3.4, "basic": 2.2,
}


def lexicon(counts):
    rng = random.Random(7)
    rows = []
    for w, r in LEXICON_RARE.items():
        rows.append((w, r))
    for w, c in counts.most_common():
        if w in LEXICON_RARE or not w.isalpha() or len(w) < 3:
            continue
        if c >= 3:
            r = round(min(2.9, max(1.0, 1.0 + rng.random() * 1.5 + 3.0 / c)), 1)
            rows.append((w, r))
    write("fixtures/lexicon.tsv", [f"{w}\t{r}" for w, r in rows])


EVAL = [
    # (input, system output, reference 0, reference 1)
    ("oregano is an indispensable ingredient in greek cuisine .",
     "oregano is a necessary element in greek cooking .",
     "oregano is a necessary ingredient in greek cooking .",
     "oregano is an essential part of greek food ."),
    ("the city is situated on the coast .",
     "the city is located on the coast .",
     "the city is located on the coast .",
     "the city is on the coast ."),
    ("the recipient of the medal was a student .",
     "the receiver of the medal was a student .",
     "the winner of the medal was a student .",
     "the medal went to a student ."),
    ("we commence the work at noon .",
     "we begin the work at noon .",
     "we start the work at noon .",
     "we begin the work at noon ."),
    ("they purchase food in the town .",
     "they buy food in the town .",
     "they buy food in the town .",
     "they get food in the town ."),
    ("the physician helps the people .",
     "the doctor helps the people .",
     "the doctor helps the people .",
     "the doctor helps people ."),
    ("the vehicle is near the house .",
     "the car is near the house .",
     "the car is near the house .",
     "the car is by the house ."),
    ("the children frequently play in the house .",
     "the children often play in the house .",
     "the children often play in the house .",
     "children often play at home ."),
    ("we have sufficient food for the party .",
     "we have enough food for the party .",
     "we have enough food for the party .",
     "there is enough food for the party ."),
    ("the town has an enormous house .",
     "the town has a huge house .",
     "the town has a huge house .",
     "the town has a very big house ."),
]


def evaluation():
    for idx, name in enumerate(["orig", "system", "ref0", "ref1"]):
        write(f"fixtures/eval/{name}.txt", [row[idx] for row in EVAL])


def main():
    n = morphology()
    assert n >= 300, n
    lines, counts = corpus()
    thesaurus()
    vocab = set(counts)
    for row in EVAL:
        for s in row:
            vocab.update(s.split())
    vectors(vocab)
    lexicon(counts)
    evaluation()
    print(f"roundtrip entries: {n}, corpus sentences: {len(lines)}, vocab: {len(counts)}")


if __name__ == "__main__":
    main()

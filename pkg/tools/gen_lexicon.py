#!/usr/bin/env python3
"""Regenerate src/trackwall/data/lexicon.tsv from the curated term table below.

Terms are stored in canonical token form (lowercase, alphanumeric tokens of
length >= 2, at most one internal space for bigrams) so they match the
tokenizer's output exactly.  Edit TERMS and re-run.
"""

from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "trackwall" / "data"

# category -> list of (term, idf) scored 1.0 for that category unless the
# term also appears in SHARED below.
TERMS = {
    "adult": [
        ("porn", 5.0), ("xxx", 5.5), ("erotic", 4.8), ("nudity", 4.6),
        ("explicit", 3.8), ("escort", 4.5), ("nsfw", 5.2), ("hentai", 5.4),
        ("adult entertainment", 4.6), ("strip club", 4.7), ("sex toys", 4.9),
        ("adult film", 4.8), ("camgirl", 5.5), ("adult videos", 5.0),
        ("sexually explicit", 4.4),
    ],
    "agriculture": [
        ("farm", 3.2), ("farming", 3.4), ("crop", 3.6), ("crops", 3.6),
        ("harvest", 3.5), ("tractor", 4.2), ("livestock", 4.0),
        ("irrigation", 4.3), ("soil", 3.4), ("fertilizer", 4.2),
        ("agronomy", 5.0), ("wheat", 3.8), ("grain", 3.6),
        ("pesticide", 4.4), ("orchard", 4.3), ("cattle", 3.8),
        ("dairy farm", 4.5), ("crop rotation", 4.8), ("arable land", 4.9),
        ("grain prices", 4.6),
    ],
    "animals": [
        ("wildlife", 3.6), ("species", 3.0), ("zoo", 3.8), ("habitat", 3.5),
        ("predator", 4.0), ("mammal", 4.1), ("reptile", 4.4),
        ("safari", 4.2), ("whale", 4.0), ("elephant", 4.0), ("tiger", 3.9),
        ("endangered species", 4.3), ("marine life", 4.2),
        ("bird species", 4.3), ("wild animals", 3.9), ("animal kingdom", 4.4),
        ("migration", 3.6), ("herd", 3.8),
    ],
    "architecture": [
        ("architect", 3.8), ("architecture", 3.5), ("skyscraper", 4.4),
        ("facade", 4.2), ("blueprint", 4.1), ("architectural", 3.9),
        ("brutalist", 5.2), ("modernist", 4.5), ("bauhaus", 5.1),
        ("building design", 4.3), ("urban design", 4.4), ("floor plan", 4.0),
        ("structural design", 4.5), ("gothic architecture", 4.9),
        ("landmark building", 4.8), ("courtyard", 4.1),
    ],
    "arts & entertainment": [
        ("movie", 2.8), ("movies", 2.8), ("film", 2.7), ("cinema", 3.4),
        ("actor", 3.2), ("actress", 3.4), ("album", 3.2), ("concert", 3.4),
        ("celebrity", 3.5), ("trailer", 3.3), ("soundtrack", 4.0),
        ("theater", 3.5), ("theatre", 3.5), ("painting", 3.5),
        ("gallery", 3.4), ("sitcom", 4.2), ("blockbuster", 4.1),
        ("premiere", 3.8), ("grammy", 4.4), ("oscar", 4.0),
        ("box office", 3.9), ("tv series", 3.6), ("music video", 3.8),
        ("film festival", 4.1), ("video games", 3.4),
    ],
    "automotive": [
        ("car", 2.6), ("cars", 2.7), ("engine", 3.0), ("sedan", 4.2),
        ("suv", 4.0), ("horsepower", 4.3), ("vehicle", 3.0),
        ("dealership", 4.1), ("diesel", 3.9), ("turbo", 4.1),
        ("torque", 4.4), ("gearbox", 4.5), ("convertible", 4.2),
        ("electric vehicle", 3.9), ("test drive", 4.0), ("car review", 4.2),
        ("fuel economy", 4.3), ("motor show", 4.5), ("pickup truck", 4.2),
    ],
    "business": [
        ("startup", 3.4), ("revenue", 3.2), ("entrepreneur", 3.7),
        ("merger", 4.0), ("acquisition", 3.8), ("ceo", 3.3),
        ("profit", 3.1), ("corporate", 3.2), ("enterprise", 3.3),
        ("shareholder", 4.0), ("ipo", 4.2),
        ("quarterly earnings", 4.3), ("business plan", 3.9),
        ("venture capital", 4.2), ("supply chain", 3.9),
        ("small business", 3.7), ("board meeting", 4.2),
    ],
    "careers": [
        ("job", 2.8), ("jobs", 2.9), ("resume", 3.8), ("hiring", 3.5),
        ("recruiter", 4.2), ("salary", 3.5), ("internship", 4.1),
        ("employer", 3.6), ("workplace", 3.5), ("vacancies", 4.3),
        ("employment", 3.3), ("job search", 3.9), ("career advice", 4.1),
        ("interview tips", 4.3), ("cover letter", 4.2),
        ("job openings", 4.0), ("career path", 4.0),
    ],
    "economics": [
        ("economy", 3.0), ("inflation", 3.6), ("gdp", 4.0),
        ("recession", 3.9), ("unemployment", 3.7), ("tariff", 4.2),
        ("deflation", 4.6), ("eurozone", 4.4), ("macroeconomics", 4.8),
        ("central bank", 4.0), ("interest rates", 3.8),
        ("monetary policy", 4.3), ("fiscal policy", 4.4),
        ("trade deficit", 4.5), ("economic growth", 3.9),
        ("commodity prices", 4.5), ("exchange rate", 4.2),
    ],
    "education": [
        ("school", 2.7), ("university", 3.0), ("students", 2.9),
        ("curriculum", 4.0), ("classroom", 3.6), ("teacher", 3.2),
        ("tuition", 4.0), ("exam", 3.4), ("scholarship", 4.0),
        ("homework", 3.8), ("kindergarten", 4.2), ("lecture", 3.6),
        ("degree", 3.2), ("campus", 3.5), ("syllabus", 4.4),
        ("academic", 3.3), ("graduation", 3.7), ("online courses", 3.9),
        ("study guide", 4.1),
    ],
    "family & parenting": [
        ("parenting", 3.8), ("toddler", 4.0), ("baby", 3.2),
        ("pregnancy", 3.8), ("childcare", 4.1), ("newborn", 4.0),
        ("diaper", 4.3), ("breastfeeding", 4.4), ("preschooler", 4.6),
        ("maternity", 4.2), ("babysitter", 4.4), ("playdate", 4.8),
        ("child development", 4.3), ("single parent", 4.3),
        ("parenting tips", 4.2), ("kids activities", 4.2),
        ("family dinner", 4.3),
    ],
    "fashion": [
        ("fashion", 3.2), ("runway", 4.3), ("couture", 4.7),
        ("outfit", 3.7), ("wardrobe", 3.9), ("streetwear", 4.6),
        ("catwalk", 4.7), ("stylist", 4.2), ("handbag", 4.2),
        ("sneakers", 3.9), ("makeup", 3.6), ("skincare", 3.9),
        ("fashion week", 4.3), ("haute couture", 4.9),
        ("fashion designer", 4.2), ("fashion trends", 4.2),
        ("dress code", 4.1),
    ],
    "folklore": [
        ("folklore", 4.6), ("legend", 3.8), ("myth", 3.9),
        ("mythology", 4.2), ("superstition", 4.6), ("haunted", 4.2),
        ("paranormal", 4.4), ("werewolf", 4.8), ("trickster", 5.0),
        ("proverb", 4.7), ("fairy tale", 4.4), ("folk tale", 4.8),
        ("urban legend", 4.6), ("ghost story", 4.5),
        ("oral tradition", 4.9), ("folk customs", 5.0),
    ],
    "food & drink": [
        ("recipe", 3.0), ("recipes", 3.0), ("cooking", 3.1),
        ("ingredients", 3.2), ("baking", 3.6), ("restaurant", 3.2),
        ("cuisine", 3.7), ("dessert", 3.7), ("sauce", 3.6),
        ("grill", 3.8), ("vegetarian", 3.9), ("cocktail", 3.9),
        ("coffee", 3.2), ("chef", 3.5), ("brunch", 4.2), ("pasta", 3.7),
        ("wine tasting", 4.3), ("vegan recipes", 4.3),
        ("slow cooker", 4.3), ("dinner ideas", 4.2),
    ],
    "health & fitness": [
        ("health", 2.6), ("symptoms", 3.4), ("diagnosis", 3.7),
        ("treatment", 3.1), ("diabetes", 4.0), ("cancer", 3.6),
        ("workout", 3.6), ("fitness", 3.2), ("nutrition", 3.6),
        ("diet", 3.2), ("cholesterol", 4.2), ("yoga", 3.8), ("gym", 3.5),
        ("exercise", 3.1), ("medication", 3.6), ("vitamin", 3.8),
        ("depression", 3.8), ("anxiety", 3.7), ("therapy", 3.5),
        ("calories", 3.7), ("cardio", 4.0), ("wellness", 3.6),
        ("disease", 3.2), ("vaccine", 3.9), ("insulin", 4.4),
        ("heart disease", 4.1), ("blood pressure", 4.0),
        ("weight loss", 3.8), ("mental health", 3.8),
        ("immune system", 4.1),
    ],
    "history": [
        ("history", 2.9), ("ancient", 3.4), ("medieval", 4.0),
        ("empire", 3.6), ("archaeology", 4.4), ("dynasty", 4.2),
        ("renaissance", 4.2), ("historian", 4.2), ("antiquity", 4.6),
        ("pharaoh", 4.7), ("heritage", 3.7), ("artifacts", 4.1),
        ("world war", 3.8), ("civil war", 3.9), ("cold war", 4.1),
        ("roman empire", 4.3), ("middle ages", 4.2),
    ],
    "hobbies & interests": [
        ("hobby", 3.8), ("hobbies", 3.9), ("knitting", 4.4),
        ("woodworking", 4.5), ("puzzle", 3.9), ("collectibles", 4.4),
        ("photography", 3.6), ("birdwatching", 4.8), ("origami", 4.9),
        ("crafts", 3.9), ("scrapbooking", 4.9), ("chess", 4.0),
        ("fishing", 3.8), ("hiking", 3.8), ("board games", 4.2),
        ("model trains", 4.9), ("stamp collecting", 5.0),
        ("diy projects", 4.3),
    ],
    "home": [
        ("furniture", 3.6), ("decor", 3.8), ("renovation", 4.0),
        ("appliances", 3.9), ("bedroom", 3.6), ("sofa", 4.0),
        ("curtains", 4.3), ("plumbing", 4.2), ("organizing", 3.9),
        ("interior design", 4.1), ("kitchen remodel", 4.6),
        ("living room", 3.8), ("home improvement", 4.0),
        ("cleaning tips", 4.3), ("lawn care", 4.5), ("paint colors", 4.4),
        ("gardening", 3.8),
    ],
    "law": [
        ("legal", 3.0), ("attorney", 3.8), ("lawyer", 3.6),
        ("lawsuit", 3.9), ("court", 3.1), ("verdict", 4.0),
        ("litigation", 4.3), ("statute", 4.4), ("plaintiff", 4.5),
        ("defendant", 4.3), ("judge", 3.4), ("felony", 4.4),
        ("subpoena", 4.7), ("supreme court", 4.0), ("contract law", 4.6),
        ("criminal law", 4.4), ("legal advice", 4.1), ("appeals court", 4.5),
    ],
    "military": [
        ("military", 3.2), ("army", 3.3), ("navy", 3.6), ("soldier", 3.6),
        ("battalion", 4.6), ("weapons", 3.5), ("missile", 4.0),
        ("warfare", 4.1), ("veteran", 3.8), ("deployment", 4.0),
        ("combat", 3.7), ("nato", 4.2), ("brigade", 4.5),
        ("submarine", 4.3), ("artillery", 4.4), ("barracks", 4.7),
        ("air force", 3.9), ("fighter jet", 4.4), ("defense budget", 4.6),
    ],
    "news": [
        ("news", 2.4), ("headlines", 3.6), ("journalist", 3.7),
        ("correspondent", 4.3), ("newsroom", 4.5), ("editorial", 3.9),
        ("bulletin", 4.3), ("reporter", 3.7), ("breaking news", 3.7),
        ("press conference", 4.0), ("live coverage", 4.2),
        ("top stories", 4.0), ("latest news", 3.5), ("front page", 4.1),
        ("wire service", 4.8),
    ],
    "personal finance": [
        ("savings", 3.4), ("invest", 3.4), ("investing", 3.5),
        ("investment", 3.3), ("mortgage", 3.8), ("loan", 3.4),
        ("budget", 3.3), ("retirement", 3.7), ("401k", 4.8),
        ("portfolio", 3.8), ("stocks", 3.5), ("debt", 3.4),
        ("taxes", 3.4), ("insurance", 3.3), ("pension", 4.0),
        ("frugal", 4.5), ("credit card", 3.7), ("mutual funds", 4.3),
        ("credit score", 4.2), ("compound interest", 4.7),
        ("financial planning", 4.2), ("bank account", 3.8),
    ],
    "pets": [
        ("pet", 3.2), ("pets", 3.3), ("dog", 2.9), ("cat", 2.9),
        ("puppy", 3.8), ("kitten", 4.0), ("veterinarian", 4.2),
        ("leash", 4.4), ("grooming", 4.2), ("hamster", 4.7),
        ("aquarium", 4.3), ("pet food", 4.1), ("dog training", 4.3),
        ("litter box", 4.6), ("dog breeds", 4.2), ("cat breeds", 4.4),
        ("pet care", 4.0), ("pet adoption", 4.3),
    ],
    "philosophy": [
        ("philosophy", 3.6), ("philosopher", 4.1), ("ethics", 3.8),
        ("metaphysics", 4.8), ("epistemology", 5.1),
        ("existentialism", 4.9), ("stoicism", 4.7), ("nietzsche", 4.8),
        ("kant", 4.7), ("socrates", 4.6), ("plato", 4.4),
        ("utilitarianism", 5.0), ("phenomenology", 5.2),
        ("moral philosophy", 4.7), ("free will", 4.3),
        ("consciousness", 4.0),
    ],
    "politics": [
        ("politics", 3.0), ("election", 3.2), ("senate", 3.8),
        ("parliament", 3.8), ("congress", 3.5), ("candidate", 3.4),
        ("campaign", 3.2), ("ballot", 4.0), ("democrat", 4.0),
        ("republican", 3.9), ("referendum", 4.3), ("legislation", 3.8),
        ("governor", 3.8), ("voters", 3.6), ("coalition", 4.0),
        ("impeachment", 4.4), ("diplomacy", 4.1),
        ("prime minister", 3.9), ("political party", 4.0),
        ("policy debate", 4.4),
    ],
    "real estate": [
        ("property", 3.1), ("listing", 3.6), ("realtor", 4.4),
        ("condo", 4.2), ("landlord", 4.1), ("tenant", 4.0),
        ("escrow", 4.8), ("zoning", 4.6), ("real estate", 3.8),
        ("home prices", 4.2), ("housing market", 4.1),
        ("property market", 4.3), ("open house", 4.3),
        ("square footage", 4.6), ("mortgage rates", 4.3),
        ("apartment rent", 4.5), ("down payment", 4.2),
    ],
    "religion": [
        ("religion", 3.4), ("church", 3.2), ("bible", 3.7),
        ("prayer", 3.6), ("faith", 3.3), ("worship", 3.8), ("god", 3.0),
        ("scripture", 4.2), ("gospel", 4.1), ("mosque", 4.2),
        ("islam", 3.9), ("quran", 4.4), ("temple", 3.8),
        ("buddhism", 4.3), ("hindu", 4.2), ("jewish", 3.9),
        ("synagogue", 4.5), ("pastor", 4.1), ("sermon", 4.3),
        ("theology", 4.4), ("pilgrimage", 4.4), ("easter", 3.9),
        ("ramadan", 4.3), ("christian", 3.5), ("catholic", 3.7),
        ("spirituality", 4.0),
    ],
    "science": [
        ("science", 2.8), ("research", 2.8), ("experiment", 3.4),
        ("physics", 3.8), ("chemistry", 3.8), ("biology", 3.8),
        ("quantum", 4.2), ("genome", 4.5), ("laboratory", 3.7),
        ("hypothesis", 4.1), ("astronomy", 4.2), ("telescope", 4.2),
        ("particle", 4.0), ("evolution", 3.8), ("neuroscience", 4.5),
        ("scientists", 3.3), ("dna", 3.9), ("molecule", 4.2),
        ("fossil", 4.1), ("peer review", 4.5),
    ],
    "society": [
        ("society", 3.0), ("community", 2.9), ("culture", 3.0),
        ("inequality", 4.0), ("demographics", 4.2), ("activism", 4.1),
        ("charity", 3.7), ("nonprofit", 4.0), ("volunteering", 4.1),
        ("diversity", 3.6), ("civic", 4.0), ("welfare", 3.8),
        ("census", 4.2), ("social issues", 4.1), ("social justice", 4.1),
        ("public opinion", 4.2), ("human rights", 3.9),
    ],
    "sports": [
        ("sports", 2.7), ("football", 3.0), ("soccer", 3.3),
        ("basketball", 3.3), ("baseball", 3.4), ("tennis", 3.5),
        ("cricket", 3.8), ("championship", 3.4), ("league", 3.1),
        ("playoff", 3.9), ("tournament", 3.4), ("athlete", 3.6),
        ("olympic", 3.8), ("touchdown", 4.3), ("marathon", 3.9),
        ("coach", 3.2), ("stadium", 3.5), ("world cup", 3.8),
        ("premier league", 4.1), ("grand slam", 4.3), ("home run", 4.2),
        ("final score", 4.2),
    ],
    "technology & computing": [
        ("technology", 2.8), ("software", 2.9), ("hardware", 3.4),
        ("computer", 2.9), ("laptop", 3.5), ("smartphone", 3.4),
        ("app", 3.0), ("programming", 3.6), ("code", 3.1),
        ("developer", 3.3), ("database", 3.6), ("algorithm", 3.8),
        ("javascript", 4.0), ("linux", 4.0), ("gadget", 3.9),
        ("chip", 3.7), ("semiconductor", 4.3), ("browser", 3.6),
        ("internet", 2.9), ("cybersecurity", 4.0),
        ("artificial intelligence", 3.8), ("machine learning", 4.0),
        ("cloud computing", 4.0), ("open source", 3.9),
        ("operating system", 3.9),
    ],
    "travel": [
        ("travel", 2.9), ("vacation", 3.4), ("flight", 3.2),
        ("hotel", 3.1), ("itinerary", 4.4), ("tourism", 3.8),
        ("destination", 3.5), ("passport", 4.0), ("backpacking", 4.5),
        ("cruise", 3.9), ("sightseeing", 4.3), ("resort", 3.8),
        ("airfare", 4.4), ("beaches", 3.8), ("tourist", 3.6),
        ("airline", 3.6), ("luggage", 4.1), ("travel guide", 4.2),
        ("road trip", 4.0),
    ],
}

# term -> {category: weight} for terms that belong to more than one
# category; these REPLACE the 1.0 weight from TERMS.
SHARED = {
    "mortgage": {"personal finance": 0.8, "real estate": 0.6},
    "legislation": {"politics": 0.7, "law": 0.7},
    "gardening": {"home": 0.5, "hobbies & interests": 0.9},
    "marathon": {"sports": 1.0, "health & fitness": 0.3},
    "stocks": {"personal finance": 0.9, "economics": 0.4},
    "pregnancy": {"family & parenting": 0.8, "health & fitness": 0.5},
    "fishing": {"hobbies & interests": 0.9, "sports": 0.3},
    "hiking": {"hobbies & interests": 0.8, "travel": 0.4},
}


def main() -> None:
    taxonomy = [
        line.strip()
        for line in (DATA_DIR / "taxonomy.txt").read_text().splitlines()
        if line.strip() and not line.startswith("#")
    ]
    valid = set(taxonomy)
    rows: dict[str, tuple[float, dict[str, float]]] = {}
    for category, terms in TERMS.items():
        assert category in valid, category
        for term, idf in terms:
            tokens = term.split(" ")
            assert 1 <= len(tokens) <= 2, term
            assert all(t == t.lower() and t.isalnum() and len(t) >= 2 for t in tokens), term
            weights = SHARED.get(term, {category: 1.0})
            if term in rows:
                prev_idf, prev_weights = rows[term]
                assert prev_idf == idf and prev_weights == weights, (
                    f"conflicting entries for {term!r}")
                continue
            for c in weights:
                assert c in valid, (term, c)
            rows[term] = (idf, weights)

    out = DATA_DIR / "lexicon.tsv"
    with out.open("w", encoding="utf-8") as fh:
        fh.write("# term\tidf\tcategory:weight[,category:weight...]\n")
        for term in sorted(rows):
            idf, weights = rows[term]
            spec = ",".join(f"{c}:{w}" for c, w in sorted(weights.items()))
            fh.write(f"{term}\t{idf}\t{spec}\n")
    print(f"wrote {len(rows)} terms to {out}")


if __name__ == "__main__":
    main()

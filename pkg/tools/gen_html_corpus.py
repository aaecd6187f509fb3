#!/usr/bin/env python3
"""Write the 50-page labeled HTML corpus under tests/fixtures/html_corpus/.

Each page is a small realistic article for one intended top-level category;
labels.tsv records filename -> expected category.  Pages deliberately vary
in length, include off-topic noise sentences, and a few use meta keywords
while others rely on body text only.
"""

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "html_corpus"

# category -> list of (title, keywords-or-None, body paragraphs)
PAGES = {
    "adult": [
        ("Late night reviews", None,
         ["Our explicit adult entertainment picks cover every strip club in town.",
          "Expect nudity and nsfw material; the erotic listings are updated weekly."]),
    ],
    "agriculture": [
        ("Field notes for spring", "farming, crop rotation",
         ["The harvest forecast depends on soil moisture and fertilizer schedules.",
          "We toured a dairy farm where cattle graze beside the wheat plots.",
          "A new tractor can justify itself in one season of heavy crops."]),
        ("Irrigation on arable land", None,
         ["Grain prices pushed many growers toward drip irrigation this year.",
          "Agronomy advisors recommend testing soil before applying pesticide."]),
    ],
    "animals": [
        ("Life in the reserve", "wildlife, habitat",
         ["The safari route passes an elephant herd and a tiger corridor.",
          "Rangers log every endangered species sighting to protect the habitat.",
          "Marine life surveys counted new whale calves this migration."]),
        ("Backyard bird species", None,
         ["A predator near the feeder scatters every mammal and reptile around.",
          "The local zoo catalogued wild animals of the entire animal kingdom."]),
    ],
    "architecture": [
        ("Concrete and light", "architecture, building design",
         ["The architect paired a brutalist facade with a glass courtyard.",
          "Her blueprint rethinks the floor plan of the modernist tower.",
          "Critics called the skyscraper a landmark building in the bauhaus spirit."]),
    ],
    "arts & entertainment": [
        ("Festival wrap-up", "cinema, box office",
         ["The film festival premiere drew every actor and actress in town.",
          "A blockbuster trailer and a moody soundtrack stole the evening.",
          "The movie earned early oscar chatter after its box office debut."]),
        ("Gallery and stage", None,
         ["The theatre season opens with a sitcom star in a serious role.",
          "A new painting gallery hosts a concert and an album listening night."]),
    ],
    "automotive": [
        ("First drive: the quiet sedan", "car review, electric vehicle",
         ["The test drive showed smooth torque from the electric vehicle's motor.",
          "Horsepower numbers match the diesel, but the gearbox feels lighter.",
          "Visit a dealership before the motor show discounts disappear."]),
        ("Pickup truck buying notes", None,
         ["Fuel economy on the turbo engine beats the old convertible easily.",
          "Cars with a hybrid drivetrain hold value better than any suv."]),
    ],
    "business": [
        ("Quarterly earnings preview", "startup, venture capital",
         ["The ceo promised shareholders a merger update before the ipo.",
          "Quarterly earnings beat forecasts; revenue and profit both grew.",
          "A venture capital firm backed the startup's new supply chain plan."]),
        ("Running a small business", None,
         ["Write a business plan before the acquisition talks begin.",
          "Every entrepreneur needs a board meeting cadence and a corporate budget."]),
    ],
    "careers": [
        ("Landing the offer", "job search, resume",
         ["Our interview tips start with a tight resume and a clear cover letter.",
          "Recruiter screens move fast: salary bands and job openings change weekly.",
          "An internship can turn into employment if the employer sees growth."]),
        ("Workplace moves", None,
         ["Career advice for a new career path: track vacancies and keep hiring contacts warm."]),
    ],
    "economics": [
        ("The rate decision", "inflation, monetary policy",
         ["The central bank held interest rates as inflation cooled.",
          "Gdp growth slowed while the eurozone flirted with recession.",
          "A tariff fight widened the trade deficit despite fiscal policy easing."]),
        ("Macro briefing", None,
         ["Unemployment ticked down; commodity prices and the exchange rate steadied.",
          "Economists debate whether deflation or economic growth comes first."]),
    ],
    "education": [
        ("Choosing a program", "university, tuition",
         ["Campus visits help students weigh tuition against scholarship offers.",
          "The curriculum pairs classroom lectures with online courses.",
          "Every teacher shares a syllabus and a study guide before the exam."]),
        ("Kindergarten to graduation", None,
         ["Homework routines set up academic habits long before a degree."]),
    ],
    "family & parenting": [
        ("Newborn survival guide", "parenting, childcare",
         ["Breastfeeding schedules and diaper counts rule the newborn weeks.",
          "Our parenting tips cover toddler sleep and preschooler tantrums.",
          "A babysitter or maternity leave only goes so far; childcare plans matter."]),
        ("The family calendar", None,
         ["Plan one playdate a week and one family dinner a night.",
          "Child development milestones matter more than any baby gadget.",
          "A single parent juggling pregnancy and work deserves backup."]),
    ],
    "fashion": [
        ("Front row notes", "fashion week, couture",
         ["The runway mixed streetwear sneakers with haute couture gowns.",
          "A stylist reworked the wardrobe around one handbag and bold makeup.",
          "Fashion trends from the catwalk reach the outfit racks by fall."]),
        ("The designer interview", None,
         ["The fashion designer credits a strict dress code and good skincare."]),
    ],
    "folklore": [
        ("Tales from the valley", "mythology, legend",
         ["Every village keeps a ghost story and a haunted crossroads.",
          "The trickster of local myth appears in each fairy tale retelling.",
          "An oral tradition preserves the proverb better than print ever did."]),
        ("Monsters of the north", None,
         ["A werewolf legend and an urban legend share the same superstition.",
          "Folk customs around harvest carry paranormal warnings."]),
    ],
    "food & drink": [
        ("Sunday kitchen", "recipes, baking",
         ["This recipe layers pasta with a slow cooker sauce and grilled vegetables.",
          "The chef's dessert pairs a cocktail with espresso coffee.",
          "Vegan recipes and vegetarian brunch ideas round out the cuisine."]),
        ("Restaurant week", None,
         ["Dinner ideas from the tasting menu: bold ingredients, careful baking.",
          "A wine tasting follows the restaurant tour."]),
    ],
    "health & fitness": [
        ("Managing blood sugar", "diabetes, nutrition",
         ["New symptoms led to a diagnosis of diabetes and an insulin plan.",
          "Treatment pairs medication with nutrition and gym cardio.",
          "Blood pressure and cholesterol fell after the weight loss program."]),
        ("Training through winter", None,
         ["A workout of yoga and cardio keeps calories burning and anxiety low.",
          "Doctors say exercise supports the immune system and mental health.",
          "Skip the vitamin fads; therapy and wellness routines beat burnout."]),
    ],
    "history": [
        ("The fallen empire", "ancient, archaeology",
         ["Archaeology teams mapped the roman empire's frontier artifacts.",
          "A historian traced the dynasty from antiquity to the middle ages.",
          "The pharaoh exhibit anchors the museum's heritage wing."]),
        ("War and memory", None,
         ["From the civil war to the cold war, the renaissance of medieval studies continues."]),
    ],
    "hobbies & interests": [
        ("Weekend workshop", "woodworking, crafts",
         ["The woodworking bench doubles for knitting and scrapbooking nights.",
          "Between chess club and a jigsaw puzzle, the hobby room stays busy.",
          "Birdwatching and photography fill the early mornings."]),
        ("Collectors corner", None,
         ["Model trains and stamp collecting remain the classic collectibles.",
          "Diy projects with origami paper make cheap gifts."]),
    ],
    "home": [
        ("The kitchen refresh", "renovation, interior design",
         ["The kitchen remodel swapped appliances and added a pantry wall.",
          "Interior design picks: a deep sofa, linen curtains, calm paint colors.",
          "Home improvement weekends beat hiring out the plumbing."]),
        ("Order in the living room", None,
         ["Organizing the bedroom closet freed space for new furniture and decor.",
          "Lawn care and gardening finish the renovation checklist."]),
    ],
    "law": [
        ("Inside the courtroom", "litigation, attorney",
         ["The plaintiff's attorney filed the lawsuit under a consumer statute.",
          "A felony verdict hinges on what the judge admits into evidence.",
          "The defendant's lawyer promised an appeal to the supreme court."]),
        ("Legal advice basics", None,
         ["Contract law and criminal law clinics offer free legal advice.",
          "A subpoena is not optional; litigation timelines are strict."]),
    ],
    "military": [
        ("Exercise at the border", "army, deployment",
         ["The battalion joined a nato brigade for combat drills.",
          "A fighter jet wing and a submarine screen covered the deployment.",
          "Veteran officers briefed the press on artillery and missile ranges."]),
        ("Barracks report", None,
         ["The defense budget funds navy shipyards and air force weapons upgrades.",
          "Every soldier rotates through warfare simulation this spring."]),
    ],
    "news": [
        ("Evening bulletin", "breaking news, headlines",
         ["Breaking news from the newsroom: the correspondent filed from the capital.",
          "The press conference led every front page and wire service feed.",
          "Top stories and live coverage continue on the hour."]),
        ("The editor's desk", None,
         ["A journalist and an editorial team shape the latest news bulletin.",
          "Headlines move fast; the reporter verifies before the newsroom publishes."]),
    ],
    "personal finance": [
        ("Retire on a plan", "retirement, investing",
         ["Max the 401k, then build a portfolio of stocks and mutual funds.",
          "A budget with automatic savings beats chasing compound interest late.",
          "Financial planning covers insurance, taxes, and the mortgage payoff."]),
        ("Debt down, credit up", None,
         ["A credit card balance hurts your credit score more than a student loan.",
          "Frugal habits fund the pension and the bank account buffer."]),
    ],
    "pets": [
        ("Bringing the puppy home", "dog training, pet care",
         ["Crate routines and a short leash make dog training gentle.",
          "The veterinarian scheduled vaccines and grooming for the puppy.",
          "Pick pet food by age; a kitten and a senior cat eat differently."]),
        ("Small companions", None,
         ["A hamster cage or an aquarium suits a small flat better than dog breeds.",
          "Pet adoption fairs list cat breeds and a litter box starter kit."]),
    ],
    "philosophy": [
        ("On knowing", "ethics, epistemology",
         ["Epistemology asks what the philosopher can claim to know.",
          "From kant to nietzsche, moral philosophy keeps circling free will.",
          "Stoicism reads like practical ethics; existentialism like metaphysics."]),
        ("The seminar room", None,
         ["Plato and socrates anchor the course; utilitarianism and phenomenology close it.",
          "Consciousness remains philosophy's hardest problem."]),
    ],
    "politics": [
        ("Primary season", "election, campaign",
         ["The candidate's campaign leads the ballot polling in three states.",
          "Congress and the senate trade blame over stalled legislation.",
          "A referendum on the coalition could force the prime minister out."]),
        ("The whip count", None,
         ["Democrat and republican voters split on the governor's impeachment.",
          "Diplomacy stalls while every political party courts undecided voters."]),
    ],
    "real estate": [
        ("Open house weekend", "housing market, mortgage rates",
         ["The realtor priced the condo under market to spark an open house rush.",
          "Mortgage rates cooled the housing market; home prices dipped.",
          "Check square footage and zoning before the escrow clock starts."]),
        ("Landlord basics", None,
         ["A landlord and tenant split maintenance in the property listing.",
          "Save the down payment; apartment rent eats the property market gains."]),
    ],
    "religion": [
        ("Sunday reflection", "faith, scripture",
         ["The pastor's sermon wove scripture with a psalm of worship.",
          "Prayer groups read the gospel before the church service.",
          "The bible study closes with a hymn and quiet spirituality."]),
        ("Paths of faith", None,
         ["The mosque, the temple, and the synagogue share the pilgrimage season.",
          "From ramadan to easter, theology shapes the calendar of faith.",
          "Buddhism and hindu traditions draw students to comparative religion."]),
    ],
    "science": [
        ("The detector run", "physics, research",
         ["The laboratory's particle experiment passed peer review.",
          "A quantum hypothesis gains ground as the physics data accumulates.",
          "The telescope survey feeds the astronomy research group."]),
        ("Life under the lens", None,
         ["Dna sequencing and genome maps moved evolution studies forward.",
          "Neuroscience and chemistry scientists share the fossil lab this term."]),
    ],
    "society": [
        ("The volunteer block", "community, charity",
         ["A nonprofit charity drive brought the community together.",
          "Volunteering rates track civic trust in the census data.",
          "Activism around inequality dominates the public opinion survey."]),
        ("Culture shift", None,
         ["Demographics reshape society; diversity debates fill the town hall.",
          "Human rights groups press for welfare reform and social justice."]),
    ],
    "sports": [
        ("Derby day", "football, premier league",
         ["The premier league championship hinges on tonight's football derby.",
          "The stadium roared as the coach subbed the playoff hero in.",
          "A marathon of fixtures leaves the tournament wide open."]),
        ("Season preview", None,
         ["Basketball and baseball share the arena calendar with tennis.",
          "An olympic athlete headlines the world cup promotion; soccer fans packed the final score watch party."]),
    ],
    "technology & computing": [
        ("Ship it weekly", "software, open source",
         ["The developer moved the codebase to open source and cloud computing.",
          "An algorithm rewrite halved the database load on linux servers.",
          "Machine learning pipelines now gate every software release."]),
        ("Gadget bench", None,
         ["The laptop pairs a fast chip with a bright screen; the smartphone app syncs over the internet.",
          "Cybersecurity patches land in the browser and the operating system weekly."]),
    ],
    "travel": [
        ("Two weeks, one bag", "itinerary, backpacking",
         ["The itinerary covers a cruise leg, a resort stop, and city sightseeing.",
          "Backpacking keeps airfare low; luggage fees kill the vacation budget.",
          "A travel guide and a passport wallet round out the kit."]),
        ("Shoulder season", None,
         ["Tourism dips after summer: flight and hotel prices follow.",
          "Beaches stay warm; the tourist crowds and the airline queues vanish."]),
    ],
}

TEMPLATE = """<!doctype html>
<html>
<head>
<title>{title}</title>
{keywords_tag}
</head>
<body>
<h1>{title}</h1>
{paragraphs}
<p>Published by the desk editors. Contact the site for corrections.</p>
</body>
</html>
"""

# corpus is pinned at 50 pages: these categories contribute one page only
SINGLE_PAGE = {
    "agriculture", "animals", "automotive", "business", "careers",
    "economics", "education", "fashion", "history", "home", "law",
    "military",
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    labels = []
    n = 0
    for category, pages in sorted(PAGES.items()):
        if category in SINGLE_PAGE:
            pages = pages[:1]
        for i, (title, keywords, paragraphs) in enumerate(pages):
            name = f"{category.replace(' & ', '_').replace(' ', '_')}_{i}.html"
            keywords_tag = (f'<meta name="keywords" content="{keywords}">'
                            if keywords else "")
            body = "\n".join(f"<p>{p}</p>" for p in paragraphs)
            html = TEMPLATE.format(title=title, keywords_tag=keywords_tag,
                                   paragraphs=body)
            (OUT / name).write_text(html, encoding="utf-8")
            labels.append(f"{name}\t{category}")
            n += 1
    (OUT / "labels.tsv").write_text("\n".join(labels) + "\n", encoding="utf-8")
    print(f"wrote {n} fixture pages to {OUT}")


if __name__ == "__main__":
    main()

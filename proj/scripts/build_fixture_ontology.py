#!/usr/bin/env python3
"""Generate data/ontology_cs_teaching.json.

A computer-science-teaching ontology (about 350 concepts) covering all five
similarity dimensions plus semiotic terms. Knowledge is declared in compact
tables below and expanded into the ontology JSON format (format 1).

    python3 scripts/build_fixture_ontology.py [output.json]
"""
import json
import sys
from pathlib import Path

concepts = {}   # id -> dict
order = []
sort_edges = []
compositions = []
restrictive = []
descriptive = []
domains = []
correspondences = []

ESSENTIAL = {
    "entity", "physical_entity", "abstract_entity", "action",
    "living_thing", "person", "artifact", "device", "place",
    "document", "furniture", "material_thing", "machine", "electrical_device",
    "electronic_device", "appliance", "implement", "container", "structure",
    "room", "communicate", "create", "use", "component",
}


def add(cid, kind, english=None, spanish=None):
    if cid in concepts:
        return
    terms = [{"term": english or cid.replace("_", " "), "language": "en"}]
    if spanish:
        terms.append({"term": spanish, "language": "es"})
    concepts[cid] = {"id": cid, "kind": kind, "terms": terms, "is_essential": cid in ESSENTIAL}
    order.append(cid)


def tree(kind, text):
    """Indented outline: each line 'child [+extra_parent ...]'."""
    stack = []
    for raw in text.strip("\n").splitlines():
        if not raw.strip():
            continue
        depth = (len(raw) - len(raw.lstrip(" "))) // 2
        tokens = raw.split()
        cid, extra = tokens[0], [t[1:] for t in tokens[1:] if t.startswith("+")]
        add(cid, kind)
        del stack[depth:]
        if stack:
            sort_edges.append({"child": cid, "parent": stack[-1]})
        for p in extra:
            sort_edges.append({"child": cid, "parent": p})
        stack.append(cid)


# ---------------------------------------------------------------- sort
tree("entity", """
entity
  physical_entity
    object
      whole
        living_thing
          organism
            person
              adult
                professional
                  educator
                    teacher
                    academic
                      professor
                        associate_professor
                        full_professor
                      lecturer
                      researcher
                  engineer
                    software_engineer
                    programmer
                  technician
                    lab_technician
                  administrator
                worker
                  assistant
                    teaching_assistant +educator
                    research_assistant +researcher
                  secretary
                  janitor
              learner
                student
                  undergraduate
                  postgraduate
                    doctoral_student
                intellectual
                  scholar
                    graduate
                      bachelor
                      master_graduate
        artifact
          instrumentality
            device
              electrical_device
                connector
                  plug
                  socket_outlet
                power_strip +connector
                extension_cord +connector
                electric_lamp
                  reading_lamp +lamp
                  desk_lamp +lamp
                appliance
                  home_appliance
                    kitchen_appliance
                      microwave
                      toaster
                      coffee_maker
                      kettle
                    white_goods
                      fridge
                      washing_machine
                  air_conditioner
              source_of_illumination
                lamp
                  ceiling_lamp
                  flashlight
              machine
                computer
                  personal_computer
                    desktop_computer
                    portable_computer
                      laptop
                      netbook
                  server_computer
                    file_server
                    web_server
                  workstation
                  mainframe
                office_machine
                  printer +output_device
                    laser_printer
                    inkjet_printer
                  photocopier
                  scanner +input_device
                  shredder
              electronic_device
                electronic_equipment
                  peripheral
                    input_device
                      keyboard
                      mouse
                      webcam
                      microphone
                      touchpad
                    output_device
                      display
                        screen
                        monitor +screen
                        projector
                      speaker
                      headphones
                  network_device
                    router
                    network_switch
                  mobile_device
                    smartphone
                    tablet
                storage_device
                  drive
                    disk_drive
                      hard_disk_drive
                      optical_drive
                    solid_state_drive
                  memory_device
                    flash_memory
                      pendrive
                      memory_card
                  optical_disc
                    cd
                    dvd
              mechanical_device
                stapler
                hole_punch
                pencil_sharpener
            implement
              writing_implement
                pencil
                pen
                  ballpoint_pen
                  fountain_pen
                marker
                  cd_marker
                  whiteboard_marker
                  highlighter
                chalk
              eraser
              ruler
              scissors
            container
              folder +covering
              box
              binder
              briefcase
              backpack
              bin
            furnishing
              furniture
                table
                  desk
                  workbench
                  meeting_table
                chair
                  office_chair
                bookshelf
                cabinet
                  filing_cabinet
            surface
              board
                blackboard
                whiteboard
                noticeboard
                  cork_board
            covering
              lampshade
              sleeve
          structure
            building
              university_building
                faculty_building
              library_building
            area
              room
                office +workplace
                  department_office
                laboratory +workplace
                  computer_lab
                meeting_room +workplace
                classroom
                  lecture_hall
                seminar_room
                cafeteria
          creation
            representation
              picture
                poster +document
                photograph
                diagram
            publication
              book
                textbook
              journal
                article
          component
            computer_component
              cpu
              ram
              motherboard
              power_supply
              network_card
              graphics_card
              cooling_fan
              computer_case
              battery
              circuit_board
              usb_connector
              flash_chip
              controller_chip
              platter
              read_write_head
              spindle_motor
              data_port
              display_panel
              backlight
              key_set
              mouse_button
              optical_sensor
              scroll_wheel
              image_sensor
              print_head
              paper_tray
              ink_cartridge
              scanning_glass
              document_feeder
            appliance_part
              magnetron
              turntable
              compressor
              thermostat
              freezer_compartment
              ice_maker
              grill_element
              timer
              control_panel
              appliance_door
              shelf
            electrical_part
              power_cord
              light_bulb
              lamp_base
              on_off_switch
              prongs
              plug_housing
              socket_set
              fuse
              surge_protector
              status_led
            stationery_part
              staples_magazine
              stapler_spring
              anvil
              stapler_base
              folder_cover
              folder_spine
              folder_pocket
              graphite_core
              wooden_body
              pencil_eraser
              ink_reservoir
              felt_tip
              plastic_body
              marker_cap
              pendrive_cap
              chalk_tray
              writing_surface
              board_frame
              paper_sheet
              printed_image
              picture_frame
              stand
            room_part
              door
              window
              power_outlet
              wall
              floor
      material_thing
        substance
          paper
          plastic
          metal
          wood
          glass
    place
      workplace
      location
        campus
        city
  abstract_entity
    communication
      written_communication
        document
          educational_material
            tutorial
            lecture_notes
            exercise_sheet
          report
          scientific_paper
          syllabus
        text
      spoken_communication
        lecture
        talk
    psychological_feature
      event
        meeting
        exam
        course
          seminar
      cognition
        knowledge
          computer_science
          mathematics
    measure
      time_period
""")

for part in ["lesson", "exercise", "explanation", "worked_example", "solution"]:
    add(part, "abstract")
    sort_edges.append({"child": part, "parent": "educational_material"})

for c in ["abstract_entity", "communication", "written_communication", "text", "spoken_communication",
          "lecture", "talk", "psychological_feature", "event", "meeting", "exam", "course", "seminar",
          "cognition", "knowledge", "computer_science", "mathematics", "measure", "time_period"]:
    concepts[c]["kind"] = "abstract"

tree("action", """
action
  act
    communicate
      inform
        explain
        teach
          give_a_lecture +talk_to
          tutor
          supervise
        evaluate
          grade
      talk_to
        discuss
        present
      write
        write_papers
        annotate
        type_text
    create
      program
        debug
      design
      draw
    use
      operate
        compute
        print_document
        scan_document
        display_image
        store_data
          backup
        transfer_data
        connect
        supply_power
        illuminate
        point_and_click
      write_by_hand
      erase
      staple
      file_documents
      punch_holes
    change_temperature
      heat
        cook
      cool
        freeze
    gather
      meet
      attend
    work
      research
        experiment
      study
        learn
        read
    move
      carry
      hang
""")

for a in ["to_" + x for x in []]:
    pass

# ---------------------------------------------------------------- compositions
def comp(whole, required=(), optional=()):
    for p in required:
        compositions.append({"whole": whole, "part": p, "required": True})
    for p in optional:
        compositions.append({"whole": whole, "part": p, "required": False})


comp("personal_computer", ["cpu", "ram", "motherboard", "power_supply", "hard_disk_drive", "computer_case"],
     ["keyboard", "mouse", "screen", "speaker", "webcam", "optical_drive"])
comp("desktop_computer", ["cpu", "ram", "motherboard", "power_supply", "hard_disk_drive", "computer_case"],
     ["keyboard", "mouse", "monitor", "speaker"])
comp("laptop", ["cpu", "ram", "motherboard", "battery", "screen", "keyboard", "touchpad", "computer_case"],
     ["webcam", "hard_disk_drive", "optical_drive", "speaker"])
comp("server_computer", ["cpu", "ram", "motherboard", "power_supply", "hard_disk_drive", "computer_case",
                         "network_card"], ["cooling_fan", "graphics_card"])
comp("reading_lamp", ["light_bulb", "lamp_base", "on_off_switch", "power_cord"], ["lampshade"])
comp("microwave", ["magnetron", "appliance_door", "control_panel", "power_cord"], ["turntable", "timer",
                                                                                   "grill_element"])
comp("fridge", ["compressor", "appliance_door", "thermostat", "power_cord", "shelf"], ["freezer_compartment",
                                                                                         "ice_maker", "control_panel"])
comp("stapler", ["staples_magazine", "stapler_spring", "anvil", "stapler_base"])
comp("folder", ["folder_cover", "folder_spine"], ["folder_pocket"])
comp("keyboard", ["key_set", "circuit_board"], ["data_port", "status_led"])
comp("mouse", ["mouse_button", "optical_sensor", "circuit_board"], ["scroll_wheel", "data_port"])
comp("hard_disk_drive", ["platter", "read_write_head", "controller_chip", "spindle_motor", "data_port", "circuit_board"])
comp("pendrive", ["flash_chip", "controller_chip", "usb_connector", "circuit_board"], ["pendrive_cap", "status_led"])
comp("scanner", ["scanning_glass", "image_sensor", "light_bulb", "control_panel", "power_cord"],
     ["document_feeder"])
comp("printer", ["print_head", "paper_tray", "control_panel", "power_cord", "ink_cartridge"],
     ["document_feeder", "scanning_glass"])
comp("screen", ["display_panel", "backlight", "board_frame", "circuit_board"], ["speaker", "stand"])
comp("blackboard", ["writing_surface", "board_frame"], ["chalk_tray"])
comp("whiteboard", ["writing_surface", "board_frame"], ["marker_cap"])
comp("poster", ["paper_sheet", "printed_image"], ["picture_frame"])
comp("plug", ["prongs", "plug_housing"], ["fuse"])
comp("power_strip", ["socket_set", "power_cord", "plug", "plug_housing"], ["on_off_switch", "surge_protector",
                                                                          "fuse"])
comp("pencil", ["graphite_core", "wooden_body"], ["pencil_eraser"])
comp("cd_marker", ["ink_reservoir", "felt_tip", "plastic_body"], ["marker_cap"])
comp("office", ["desk", "office_chair", "door", "power_outlet"], ["personal_computer", "bookshelf", "window",
                                                                  "filing_cabinet"])
comp("laboratory", ["workbench", "chair", "door", "power_outlet"], ["personal_computer", "window", "cabinet"])
comp("meeting_room", ["meeting_table", "chair", "door"], ["projector", "screen", "whiteboard", "window",
                                                          "power_outlet"])
comp("classroom", ["desk", "chair", "door", "blackboard"], ["projector", "window"])
comp("tutorial", ["lesson", "explanation"], ["exercise", "worked_example", "solution"])
comp("lecture_notes", ["lesson"], ["worked_example"])

# ---------------------------------------------------------------- restrictive
def restrict(action, positive=(), negative=()):
    for e in positive:
        restrictive.append({"action": action, "entity": e, "sign": "positive"})
    for e in negative:
        restrictive.append({"action": action, "entity": e, "sign": "negative"})


restrict("teach", ["teacher", "associate_professor", "full_professor", "lecturer", "teaching_assistant",
                   "tutorial"], ["bachelor"])
restrict("explain", ["teacher", "tutorial", "lecturer", "textbook"])
restrict("give_a_lecture", ["teacher", "associate_professor", "full_professor", "lecturer",
                            "teaching_assistant"])
restrict("tutor", ["teacher", "teaching_assistant", "tutorial"])
restrict("supervise", ["associate_professor", "full_professor"], ["bachelor"])
restrict("grade", ["teacher", "associate_professor", "teaching_assistant"])
restrict("study", ["bachelor", "student", "tutorial"])
restrict("learn", ["bachelor", "student"], ["server_computer"])
restrict("read", ["tutorial", "textbook", "poster", "scientific_paper"])
restrict("research", ["associate_professor", "researcher", "laboratory", "teaching_assistant"])
restrict("write_papers", ["associate_professor", "researcher", "personal_computer", "laptop"])
restrict("program", ["personal_computer", "laptop", "server_computer", "programmer", "teaching_assistant"])
restrict("compute", ["personal_computer", "laptop", "server_computer", "desktop_computer"],
         ["microwave", "fridge", "reading_lamp"])
restrict("store_data", ["hard_disk_drive", "pendrive", "server_computer", "personal_computer", "laptop"],
         ["screen", "keyboard"])
restrict("backup", ["hard_disk_drive", "pendrive", "server_computer"])
restrict("transfer_data", ["pendrive", "hard_disk_drive", "network_card"])
restrict("connect", ["plug", "power_strip", "pendrive", "hard_disk_drive"])
restrict("supply_power", ["plug", "power_strip", "power_supply"])
restrict("illuminate", ["reading_lamp", "screen", "ceiling_lamp"])
restrict("heat", ["microwave", "toaster"], ["fridge"])
restrict("cook", ["microwave"], ["fridge"])
restrict("cool", ["fridge"], ["microwave"])
restrict("print_document", ["printer"], ["scanner"])
restrict("scan_document", ["scanner"], ["printer"])
restrict("type_text", ["keyboard", "laptop"], ["mouse"])
restrict("point_and_click", ["mouse", "touchpad"], ["keyboard"])
restrict("display_image", ["screen", "projector", "poster", "blackboard"])
restrict("write_by_hand", ["pencil", "cd_marker", "pen", "blackboard", "whiteboard"])
restrict("erase", ["blackboard", "whiteboard", "pencil"], ["cd_marker", "poster"])
restrict("annotate", ["cd_marker", "pencil", "highlighter"])
restrict("staple", ["stapler"], ["folder"])
restrict("file_documents", ["folder", "filing_cabinet", "binder"], ["stapler"])
restrict("carry", ["folder", "laptop", "pendrive", "backpack"], ["server_computer", "fridge"])
restrict("hang", ["poster", "blackboard"], ["microwave"])
restrict("meet", ["meeting_room", "office"], ["laboratory"])
restrict("discuss", ["meeting_room", "office"])
restrict("experiment", ["laboratory"], ["meeting_room"])
restrict("attend", ["lecture_hall", "classroom"])
restrict("present", ["projector", "screen", "blackboard", "poster"])

# ---------------------------------------------------------------- domains
def value(cid):
    add(cid, "value")


def enum_domain(did, members):
    add(did, "domain")
    for m in members:
        value(m)
    domains.append({"id": did, "variant": "enumerated", "members": list(members)})


def num_domain(did, lower, upper, unit):
    add(did, "domain")
    domains.append({"id": did, "variant": "numeric", "lower": lower, "upper": upper, "unit": unit})


for a in ["color", "size", "weight", "storage_capacity", "power_consumption", "portability", "material",
          "academic_degree", "teaching_experience", "capacity", "noise_level", "price", "shape",
          "interface_type", "lifespan", "employer", "field", "persistence"]:
    add(a, "attribute")
    sort_edges.append({"child": a, "parent": "measure" if a in ("weight", "price", "capacity") else "abstract_entity"})
    concepts[a]["kind"] = "attribute"

enum_domain("colors", ["white", "black", "grey", "green", "blue", "red", "yellow", "silver"])
enum_domain("sizes", ["tiny", "small", "medium", "large", "huge"])
num_domain("length_cm", 0, 1000, "cm")
correspondences.append({"from_domain": "sizes", "to_domain": "length_cm", "mapping": "fuzzy-labels",
                        "labels": {"tiny": 5, "small": 20, "medium": 60, "large": 200, "huge": 600}})
num_domain("mass_kg", 0, 200, "kg")
enum_domain("weight_classes", ["light", "moderate", "heavy"])
correspondences.append({"from_domain": "weight_classes", "to_domain": "mass_kg", "mapping": "fuzzy-labels",
                        "labels": {"light": 0.5, "moderate": 5, "heavy": 50}})
num_domain("capacity_gb", 0, 4000, "GB")
num_domain("capacity_mb", 0, 4000000, "MB")
correspondences.append({"from_domain": "capacity_gb", "to_domain": "capacity_mb", "mapping": "linear",
                        "scale": 1000, "offset": 0})
correspondences.append({"from_domain": "capacity_mb", "to_domain": "capacity_gb", "mapping": "linear",
                        "scale": 0.001, "offset": 0})
num_domain("power_w", 0, 2000, "W")
enum_domain("energy_ratings", ["low_power", "mid_power", "high_power"])
correspondences.append({"from_domain": "energy_ratings", "to_domain": "power_w", "mapping": "fuzzy-labels",
                        "labels": {"low_power": 10, "mid_power": 200, "high_power": 1000}})
enum_domain("portability_levels", ["fixed", "movable", "portable", "pocketable"])
enum_domain("materials", ["paper_material", "plastic_material", "metal_material", "wood_material",
                          "glass_material", "mixed_material"])
enum_domain("degrees", ["no_degree", "bachelor_degree", "master_degree", "doctorate"])
num_domain("years", 0, 50, "years")
enum_domain("experience_levels", ["novice", "experienced", "senior"])
correspondences.append({"from_domain": "experience_levels", "to_domain": "years", "mapping": "fuzzy-labels",
                        "labels": {"novice": 1, "experienced": 8, "senior": 20}})
num_domain("people_count", 0, 500, "people")
enum_domain("noise_levels", ["silent", "quiet", "noisy"])
num_domain("price_eur", 0, 10000, "EUR")
enum_domain("shapes", ["rectangular", "cylindrical", "flat", "irregular"])
enum_domain("interfaces", ["usb", "sata", "mains", "wireless", "none_interface"])
num_domain("lifespan_years", 0, 30, "years")
enum_domain("employers", ["university_employer", "company_employer", "self_employed"])
enum_domain("fields", ["computer_science_field", "mathematics_field", "physics_field"])
enum_domain("persistence_kinds", ["volatile", "non_volatile"])


def describe(subject, attribute, domain, val=None, default=False):
    t = {"subject": subject, "attribute": attribute, "domain": domain, "value": val,
         "assigned_by_default": default}
    descriptive.append(t)


D = describe
# People.
for p, deg, exp in [("teacher", "master_degree", "experienced"),
                    ("associate_professor", "doctorate", "senior"),
                    ("full_professor", "doctorate", "senior"),
                    ("teaching_assistant", "master_degree", "novice"),
                    ("bachelor", "bachelor_degree", None),
                    ("researcher", "doctorate", "experienced"),
                    ("student", "no_degree", None)]:
    D(p, "academic_degree", "degrees", deg)
    D(p, "teaching_experience", "experience_levels", exp)
# Devices.
D("personal_computer", "color", "colors", "black", True)
D("personal_computer", "size", "sizes", "medium")
D("personal_computer", "weight", "weight_classes", "moderate")
D("personal_computer", "power_consumption", "energy_ratings", "mid_power")
D("personal_computer", "portability", "portability_levels", "movable")
D("personal_computer", "storage_capacity", "capacity_gb", 1000)
D("personal_computer", "price", "price_eur", 900)
D("laptop", "color", "colors", "silver")
D("laptop", "size", "sizes", "small")
D("laptop", "weight", "weight_classes", "light")
D("laptop", "power_consumption", "energy_ratings", "low_power")
D("laptop", "portability", "portability_levels", "portable")
D("laptop", "storage_capacity", "capacity_gb", 512)
D("laptop", "price", "price_eur", 1100)
D("server_computer", "color", "colors", "black", True)
D("server_computer", "size", "sizes", "large")
D("server_computer", "weight", "weight_classes", "heavy")
D("server_computer", "power_consumption", "energy_ratings", "high_power")
D("server_computer", "portability", "portability_levels", "fixed")
D("server_computer", "storage_capacity", "capacity_gb", 4000)
D("server_computer", "noise_level", "noise_levels", "noisy")
D("reading_lamp", "color", "colors", "black", True)
D("reading_lamp", "size", "sizes", "small")
D("reading_lamp", "power_consumption", "energy_ratings", "low_power")
D("reading_lamp", "portability", "portability_levels", "movable")
D("reading_lamp", "material", "materials", "metal_material")
D("microwave", "color", "colors", "white", True)
D("microwave", "size", "sizes", "medium")
D("microwave", "weight", "weight_classes", "moderate")
D("microwave", "power_consumption", "energy_ratings", "high_power")
D("microwave", "portability", "portability_levels", "movable")
D("microwave", "noise_level", "noise_levels", "quiet")
D("fridge", "color", "colors", "white", True)
D("fridge", "size", "sizes", "large")
D("fridge", "weight", "weight_classes", "heavy")
D("fridge", "power_consumption", "energy_ratings", "mid_power")
D("fridge", "portability", "portability_levels", "fixed")
D("fridge", "noise_level", "noise_levels", "quiet")
D("stapler", "color", "colors")
D("stapler", "size", "sizes", "small")
D("stapler", "material", "materials", "metal_material")
D("stapler", "portability", "portability_levels", "portable")
D("folder", "color", "colors")
D("folder", "size", "sizes", "small")
D("folder", "material", "materials", "paper_material")
D("folder", "portability", "portability_levels", "portable")
D("plug", "color", "colors", "white", True)
D("plug", "size", "sizes", "tiny")
D("plug", "material", "materials", "plastic_material")
D("plug", "interface_type", "interfaces", "mains")
D("power_strip", "color", "colors", "white", True)
D("power_strip", "size", "sizes", "small")
D("power_strip", "material", "materials", "plastic_material")
D("power_strip", "interface_type", "interfaces", "mains")
D("power_strip", "portability", "portability_levels", "movable")
D("pencil", "color", "colors", "yellow", True)
D("pencil", "size", "sizes", "tiny")
D("pencil", "material", "materials", "wood_material")
D("pencil", "portability", "portability_levels", "pocketable")
D("pencil", "shape", "shapes", "cylindrical")
D("cd_marker", "color", "colors", "black", True)
D("cd_marker", "size", "sizes", "tiny")
D("cd_marker", "material", "materials", "plastic_material")
D("cd_marker", "portability", "portability_levels", "pocketable")
D("cd_marker", "shape", "shapes", "cylindrical")
D("keyboard", "color", "colors", "black", True)
D("keyboard", "size", "sizes", "small")
D("keyboard", "material", "materials", "plastic_material")
D("keyboard", "interface_type", "interfaces", "usb")
D("keyboard", "portability", "portability_levels", "movable")
D("mouse", "color", "colors", "black", True)
D("mouse", "size", "sizes", "tiny")
D("mouse", "material", "materials", "plastic_material")
D("mouse", "interface_type", "interfaces", "usb")
D("mouse", "portability", "portability_levels", "portable")
D("hard_disk_drive", "storage_capacity", "capacity_gb", 2000)
D("hard_disk_drive", "size", "sizes", "small")
D("hard_disk_drive", "interface_type", "interfaces", "sata")
D("hard_disk_drive", "material", "materials", "metal_material")
D("hard_disk_drive", "portability", "portability_levels", "movable")
D("pendrive", "storage_capacity", "capacity_mb", 64000)
D("pendrive", "size", "sizes", "tiny")
D("pendrive", "interface_type", "interfaces", "usb")
D("pendrive", "material", "materials", "plastic_material")
D("pendrive", "portability", "portability_levels", "pocketable")
D("scanner", "color", "colors", "grey", True)
D("scanner", "size", "sizes", "medium")
D("scanner", "interface_type", "interfaces", "usb")
D("scanner", "power_consumption", "energy_ratings", "low_power")
D("scanner", "portability", "portability_levels", "movable")
D("printer", "color", "colors", "grey", True)
D("printer", "size", "sizes", "medium")
D("printer", "interface_type", "interfaces", "usb")
D("printer", "power_consumption", "energy_ratings", "mid_power")
D("printer", "portability", "portability_levels", "movable")
D("printer", "noise_level", "noise_levels", "noisy")
D("screen", "color", "colors", "black", True)
D("screen", "size", "sizes", "medium")
D("screen", "shape", "shapes", "flat")
D("screen", "material", "materials", "glass_material")
D("screen", "power_consumption", "energy_ratings", "low_power")
D("blackboard", "color", "colors", "green")
D("blackboard", "size", "sizes", "large")
D("blackboard", "shape", "shapes", "flat")
D("blackboard", "material", "materials", "wood_material")
D("blackboard", "portability", "portability_levels", "fixed")
D("poster", "color", "colors")
D("poster", "size", "sizes", "medium")
D("poster", "shape", "shapes", "flat")
D("poster", "material", "materials", "paper_material")
D("poster", "portability", "portability_levels", "portable")
D("office", "size", "sizes", "large")
D("office", "capacity", "people_count", 4)
D("office", "noise_level", "noise_levels", "quiet")
D("laboratory", "size", "sizes", "huge")
D("laboratory", "capacity", "people_count", 30)
D("laboratory", "noise_level", "noise_levels", "noisy")
D("meeting_room", "size", "sizes", "large")
D("meeting_room", "capacity", "people_count", 12)
D("meeting_room", "noise_level", "noise_levels", "quiet")
D("tutorial", "material", "materials", "paper_material", True)
for p in ["teacher", "associate_professor", "full_professor", "teaching_assistant", "researcher", "lecturer"]:
    D(p, "employer", "employers", "university_employer")
    D(p, "field", "fields", "computer_science_field")
D("bachelor", "field", "fields", "computer_science_field")
D("hard_disk_drive", "persistence", "persistence_kinds", "non_volatile")
D("pendrive", "persistence", "persistence_kinds", "non_volatile")
D("ram", "persistence", "persistence_kinds", "volatile")
for p in ["hard_disk_drive", "pendrive"]:
    D(p, "color", "colors")
    D(p, "price", "price_eur")

# ---------------------------------------------------------------- extra taxonomy depth
# Further domain vocabulary so the store reaches the scale of the study's
# hand-curated subset; these concepts only take part in the sort dimension.
fillers = {
    "software": ["operating_system", "compiler", "text_editor", "spreadsheet", "web_browser",
                 "database_system", "ide", "version_control", "virtual_machine", "antivirus"],
    "course_subject": ["algorithms", "data_structures", "operating_systems_course", "networks_course",
                       "databases_course", "programming_course", "discrete_maths", "computer_architecture",
                       "software_engineering_course", "artificial_intelligence_course"],
    "academic_event": ["thesis_defense", "office_hours", "lab_session", "conference", "workshop", "faculty_meeting",
                       "enrolment", "graduation"],
    "cable": ["usb_cable", "hdmi_cable", "ethernet_cable", "power_cable", "vga_cable"],
    "office_supplies": ["paper_clip", "sticky_note", "envelope", "notebook", "calculator", "glue_stick",
                        "rubber_band", "tape_dispenser"],
}
add("software", "abstract")
sort_edges.append({"child": "software", "parent": "written_communication"})
add("course_subject", "abstract")
sort_edges.append({"child": "course_subject", "parent": "computer_science"})
add("academic_event", "abstract")
sort_edges.append({"child": "academic_event", "parent": "event"})
add("cable", "entity")
sort_edges.append({"child": "cable", "parent": "electrical_device"})
add("office_supplies", "entity")
sort_edges.append({"child": "office_supplies", "parent": "instrumentality"})
sort_edges.append({"child": "stapler", "parent": "office_supplies"})
sort_edges.append({"child": "folder", "parent": "office_supplies"})
for parent, kids in fillers.items():
    for k in kids:
        add(k, concepts[parent]["kind"])
        sort_edges.append({"child": k, "parent": parent})

# Spanish terms for the benchmark concepts (semiotic dimension).
spanish = {
    "reading_lamp": "lámpara de lectura", "personal_computer": "ordenador personal", "laptop": "portátil",
    "server_computer": "servidor", "teacher": "profesor", "tutorial": "tutorial", "meeting_room": "sala de reuniones",
    "laboratory": "laboratorio", "microwave": "microondas", "office": "despacho", "screen": "pantalla",
    "blackboard": "pizarra", "stapler": "grapadora", "folder": "carpeta", "plug": "enchufe",
    "power_strip": "regleta", "pencil": "lápiz", "cd_marker": "rotulador de CD",
    "associate_professor": "profesor titular", "teaching_assistant": "profesor ayudante", "bachelor": "licenciado",
    "write_papers": "escribir artículos", "program": "programar", "give_a_lecture": "dar una clase",
    "teach": "enseñar", "keyboard": "teclado", "mouse": "ratón", "fridge": "frigorífico",
    "hard_disk_drive": "disco duro", "pendrive": "memoria USB", "scanner": "escáner", "printer": "impresora",
    "poster": "póster",
}
for cid, es in spanish.items():
    concepts[cid]["terms"].append({"term": es, "language": "es"})


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "ontology_cs_teaching.json"
    doc = {
        "format": 1,
        "concepts": [concepts[c] for c in order],
        "sort_edges": sort_edges,
        "compositions": compositions,
        "restrictive": restrictive,
        "descriptive": descriptive,
        "domains": domains,
        "correspondences": correspondences,
    }
    out.write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"{out}: {len(order)} concepts, {len(sort_edges)} sort edges, {len(compositions)} compositions, "
          f"{len(restrictive)} restrictive, {len(descriptive)} descriptive, {len(domains)} domains")


if __name__ == "__main__":
    main()

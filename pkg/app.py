"""
Entry point for the Suffixient Lab dashboard
Initialize logging, env variables and styling as needed
Delegate to a Display object to manage the drawing of the UI components

To see it in action, run:
python -m streamlit run app.py
"""

from dotenv import load_dotenv
import logging
import streamlit as st
from util.setup import setup_logger, STYLE
from views.displays import Display

root = logging.getLogger()
if "root" not in st.session_state:
    st.session_state.root = root
    setup_logger(root)

load_dotenv(override=True)

st.set_page_config(
    layout="wide",
    page_title="Suffixient Lab",
    menu_items={
        "About": "Measure suffixient sets and BWT runs, and check the closed forms of the clustered and run-minimal families."
    },
    page_icon="🧬",
    initial_sidebar_state="expanded",
)
st.markdown(STYLE, unsafe_allow_html=True)

Display().display_page()

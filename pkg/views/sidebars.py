import streamlit as st
from util.setup import settings


def display_settings():
    current = settings()
    st.markdown(
        "<span style='font-size:13px;'>Budgets come from SUFFIXIENT_* environment variables or a .env file.</span>",
        unsafe_allow_html=True,
    )
    st.dataframe(
        data=[{"Setting": name, "Value": value} for name, value in current.model_dump().items()],
        hide_index=True,
    )


def display_sidebar() -> dict:
    """
    Show the run options shared by every tab
    :return: seed, oracle, big and workers as chosen
    """
    with st.sidebar:
        st.markdown("### Run options")
        seed = st.number_input("Seed", min_value=0, value=0, step=1)
        oracle = st.checkbox("Cross-check with brute force", value=False)
        big = st.checkbox("Include k = 22", value=False, help="A 4,194,305-symbol word; takes a while")
        workers = st.slider("Workers", min_value=1, max_value=16, value=settings().workers)
        st.markdown("---")
        st.markdown("### Budgets")
        display_settings()
    return {"seed": int(seed), "oracle": oracle, "big": big, "workers": workers}

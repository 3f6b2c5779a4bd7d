import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
groups = [group["mpg"].dropna() for _, group in cars.groupby("origin")]
fig, ax = plt.subplots()
ax.boxplot(groups, labels=sorted(cars["origin"].unique()), whis=1.5)
ax.set_xlabel("origin")
ax.set_ylabel("mpg")
plt.show()
